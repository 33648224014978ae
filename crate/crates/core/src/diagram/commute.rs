use std::collections::BTreeMap;

use super::report::{Check, VerificationReport};
use crate::abcat::AbelianCategory;
use crate::error::{Error, Result};

/// A finite diagram: named objects and named morphisms between them.
///
/// The directed multigraph must be acyclic once identity self-loops are
/// removed; commutativity checking composes all simple paths.
#[derive(Clone, Debug)]
pub struct Diagram<C: AbelianCategory> {
    objects: Vec<(String, C::Object)>,
    arrows: Vec<Arrow<C::Morphism>>,
}

#[derive(Clone, Debug)]
struct Arrow<M> {
    name: String,
    src: usize,
    dst: usize,
    morphism: M,
}

impl<C: AbelianCategory> Diagram<C> {
    pub fn new() -> Self {
        Diagram {
            objects: Vec::new(),
            arrows: Vec::new(),
        }
    }

    pub fn add_object(&mut self, name: impl Into<String>, object: C::Object) -> Result<()> {
        let name = name.into();
        if self.objects.iter().any(|(n, _)| *n == name) {
            return Err(Error::InvalidInput(format!("duplicate object '{name}'")));
        }
        self.objects.push((name, object));
        Ok(())
    }

    /// Adds a named arrow. The endpoints must be declared objects and must
    /// match the morphism's own endpoints in the category.
    pub fn add_arrow(
        &mut self,
        cat: &C,
        name: impl Into<String>,
        src: &str,
        dst: &str,
        morphism: C::Morphism,
    ) -> Result<()> {
        let name = name.into();
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::InvalidInput(format!("duplicate morphism '{name}'")));
        }
        let si = self.object_index(src)?;
        let di = self.object_index(dst)?;
        if !cat.object_equal(&cat.source(&morphism), &self.objects[si].1) {
            return Err(Error::ObjectMismatch(format!(
                "morphism '{name}' does not start at '{src}'"
            )));
        }
        if !cat.object_equal(&cat.target(&morphism), &self.objects[di].1) {
            return Err(Error::ObjectMismatch(format!(
                "morphism '{name}' does not end at '{dst}'"
            )));
        }
        self.arrows.push(Arrow {
            name,
            src: si,
            dst: di,
            morphism,
        });
        Ok(())
    }

    fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::UnknownReference(format!("object '{name}'")))
    }

    pub fn object_names(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(|(n, _)| n.as_str())
    }
}

impl<C: AbelianCategory> Default for Diagram<C> {
    fn default() -> Self {
        Self::new()
    }
}

/// Composes every simple directed path between every ordered pair of
/// objects and compares the composites pairwise.
///
/// Identity self-loops are dropped before the cycle check; any remaining
/// cycle is an input error. The report carries one conclusion per object
/// pair with at least two distinct paths, with unequal pairs of paths named
/// in the detail.
pub fn check_commutes<C: AbelianCategory>(cat: &C, d: &Diagram<C>) -> Result<VerificationReport> {
    let arrows: Vec<&Arrow<C::Morphism>> = d
        .arrows
        .iter()
        .filter(|a| {
            !(a.src == a.dst && cat.morphism_equal(&a.morphism, &cat.identity(&d.objects[a.src].1)))
        })
        .collect();

    if has_cycle(d.objects.len(), &arrows) {
        return Err(Error::CyclicDiagram);
    }

    let mut report = VerificationReport::default();
    for start in 0..d.objects.len() {
        // All simple paths out of `start`, grouped by endpoint.
        let mut by_target: BTreeMap<usize, Vec<(String, C::Morphism)>> = BTreeMap::new();
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(start, Vec::new())];
        while let Some((node, path)) = stack.pop() {
            for (ai, arrow) in arrows.iter().enumerate() {
                if arrow.src != node {
                    continue;
                }
                let mut extended = path.clone();
                extended.push(ai);
                let composite = compose_path(cat, &arrows, &extended)?;
                let name = path_name(&arrows, &extended);
                by_target
                    .entry(arrow.dst)
                    .or_default()
                    .push((name, composite));
                stack.push((arrow.dst, extended));
            }
        }

        for (tgt, paths) in by_target {
            if paths.len() < 2 {
                continue;
            }
            let pair = format!(
                "paths {} -> {}",
                d.objects[start].0, d.objects[tgt].0
            );
            let mut disagreements = Vec::new();
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    if !cat.morphism_equal(&paths[i].1, &paths[j].1) {
                        disagreements.push(format!("{} != {}", paths[i].0, paths[j].0));
                    }
                }
            }
            let passed = disagreements.is_empty();
            let detail = if passed {
                Some(format!("{} paths agree", paths.len()))
            } else {
                Some(disagreements.join("; "))
            };
            report.push_hypothesis(Check::with_detail(pair, passed, detail));
        }
    }
    Ok(report)
}

fn compose_path<C: AbelianCategory>(
    cat: &C,
    arrows: &[&Arrow<C::Morphism>],
    path: &[usize],
) -> Result<C::Morphism> {
    let mut acc = arrows[path[0]].morphism.clone();
    for &ai in &path[1..] {
        acc = cat.compose(&arrows[ai].morphism, &acc)?;
    }
    Ok(acc)
}

fn path_name<M>(arrows: &[&Arrow<M>], path: &[usize]) -> String {
    // Composition order: later arrows apply last, so print right-to-left.
    let names: Vec<&str> = path.iter().rev().map(|&ai| arrows[ai].name.as_str()).collect();
    names.join("∘")
}

fn has_cycle<M>(objects: usize, arrows: &[&Arrow<M>]) -> bool {
    // Kahn's algorithm on the multigraph.
    let mut indegree = vec![0usize; objects];
    for a in arrows {
        indegree[a.dst] += 1;
    }
    let mut queue: Vec<usize> = (0..objects).filter(|&i| indegree[i] == 0).collect();
    let mut seen = 0;
    while let Some(node) = queue.pop() {
        seen += 1;
        for a in arrows {
            if a.src == node {
                indegree[a.dst] -= 1;
                if indegree[a.dst] == 0 {
                    queue.push(a.dst);
                }
            }
        }
    }
    seen != objects
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::{FgAb, FgGroup, GroupHom};

    fn fg(v: &[i64]) -> FgGroup {
        FgGroup::from_invariant_factors(v).unwrap()
    }

    #[test]
    fn constructed_triangle_commutes() {
        let a = fg(&[4]);
        let b = fg(&[2]);
        let f = GroupHom::from_rows(a.clone(), b.clone(), &[vec![1]]).unwrap();
        let g = GroupHom::identity(&b);
        let h = FgAb.compose(&g, &f).unwrap();

        let mut d = Diagram::<FgAb>::new();
        d.add_object("A", a).unwrap();
        d.add_object("B", b.clone()).unwrap();
        d.add_object("C", b).unwrap();
        d.add_arrow(&FgAb, "f", "A", "B", f).unwrap();
        d.add_arrow(&FgAb, "g", "B", "C", g).unwrap();
        d.add_arrow(&FgAb, "h", "A", "C", h).unwrap();

        let report = check_commutes(&FgAb, &d).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn broken_square_names_both_paths() {
        let a = fg(&[2]);
        let mut d = Diagram::<FgAb>::new();
        d.add_object("A", a.clone()).unwrap();
        d.add_object("B", a.clone()).unwrap();
        d.add_arrow(&FgAb, "top", "A", "B", GroupHom::identity(&a))
            .unwrap();
        d.add_arrow(&FgAb, "bottom", "A", "B", GroupHom::zero(a.clone(), a.clone()))
            .unwrap();
        let report = check_commutes(&FgAb, &d).unwrap();
        assert!(!report.passed());
        let failing = report.hypotheses.iter().find(|c| !c.passed).unwrap();
        let detail = failing.detail.as_deref().unwrap();
        assert!(detail.contains("top") && detail.contains("bottom"), "{detail}");
    }

    #[test]
    fn non_identity_loop_is_cyclic() {
        let a = fg(&[4]);
        let mut d = Diagram::<FgAb>::new();
        d.add_object("A", a.clone()).unwrap();
        d.add_arrow(&FgAb, "twist", "A", "A", GroupHom::from_rows(a.clone(), a, &[vec![3]]).unwrap())
            .unwrap();
        assert!(matches!(
            check_commutes(&FgAb, &d),
            Err(Error::CyclicDiagram)
        ));
    }

    #[test]
    fn identity_loops_are_ignored() {
        let a = fg(&[4]);
        let mut d = Diagram::<FgAb>::new();
        d.add_object("A", a.clone()).unwrap();
        d.add_arrow(&FgAb, "id", "A", "A", GroupHom::identity(&a))
            .unwrap();
        assert!(check_commutes(&FgAb, &d).unwrap().passed());
    }

    #[test]
    fn unknown_endpoint_is_reported() {
        let a = fg(&[2]);
        let mut d = Diagram::<FgAb>::new();
        d.add_object("A", a.clone()).unwrap();
        let err = d
            .add_arrow(&FgAb, "f", "A", "missing", GroupHom::identity(&a))
            .unwrap_err();
        assert!(matches!(err, Error::UnknownReference(_)));
    }
}
