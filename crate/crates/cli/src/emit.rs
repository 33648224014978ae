//! Serializer for diagram files: generated instances are written in the
//! same grammar the parser reads, with a fixed layout so identical seeds
//! produce identical bytes.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use abchase::abcat::AbelianCategory;
use abchase::diagram::{Mode, SesLadder};
use abchase::fgab::{FgAb, FgGroup, GroupHom};

fn factors_json(g: &FgGroup) -> String {
    let inner: Vec<String> = g
        .factors()
        .iter()
        .map(|f| f.to_i64().expect("generated factors fit i64").to_string())
        .collect();
    format!("[{}]", inner.join(", "))
}

fn matrix_json(h: &GroupHom) -> String {
    let m = h.matrix();
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let entries: Vec<String> = (0..m.cols())
                .map(|j| m[(i, j)].to_i64().expect("generated entries fit i64").to_string())
                .collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Renders a generated ladder as a checkable diagram file with a
/// `short_five` assertion in the given mode.
pub fn ladder_file(ladder: &SesLadder<GroupHom>, mode: Mode, trace: bool) -> String {
    let objects = [
        ("A", ladder.f.src().clone()),
        ("B", ladder.f.dst().clone()),
        ("C", ladder.g.dst().clone()),
        ("Ap", ladder.f_prime.src().clone()),
        ("Bp", ladder.f_prime.dst().clone()),
        ("Cp", ladder.g_prime.dst().clone()),
    ];
    let morphisms = [
        ("f", "A", "B", &ladder.f),
        ("g", "B", "C", &ladder.g),
        ("fp", "Ap", "Bp", &ladder.f_prime),
        ("gp", "Bp", "Cp", &ladder.g_prime),
        ("alpha", "A", "Ap", &ladder.alpha),
        ("beta", "B", "Bp", &ladder.beta),
        ("gamma", "C", "Cp", &ladder.gamma),
    ];
    for (name, src, dst, hom) in &morphisms {
        debug_assert!(
            FgAb.object_equal(hom.src(), &objects.iter().find(|(n, _)| n == src).unwrap().1),
            "{name} source mismatch"
        );
        debug_assert!(
            FgAb.object_equal(hom.dst(), &objects.iter().find(|(n, _)| n == dst).unwrap().1),
            "{name} target mismatch"
        );
    }

    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"category\": \"fgab\",");
    let _ = writeln!(out, "  \"objects\": {{");
    for (i, (name, obj)) in objects.iter().enumerate() {
        let comma = if i + 1 < objects.len() { "," } else { "" };
        let _ = writeln!(out, "    \"{name}\": {}{comma}", factors_json(obj));
    }
    let _ = writeln!(out, "  }},");
    let _ = writeln!(out, "  \"morphisms\": {{");
    for (i, (name, src, dst, hom)) in morphisms.iter().enumerate() {
        let comma = if i + 1 < morphisms.len() { "," } else { "" };
        let _ = writeln!(
            out,
            "    \"{name}\": {{\"src\": \"{src}\", \"dst\": \"{dst}\", \"matrix\": {}}}{comma}",
            matrix_json(hom)
        );
    }
    let _ = writeln!(out, "  }},");
    let _ = writeln!(out, "  \"assertions\": [");
    let refs = "\"f\": \"f\", \"g\": \"g\", \"fp\": \"fp\", \"gp\": \"gp\", \
                \"alpha\": \"alpha\", \"beta\": \"beta\", \"gamma\": \"gamma\"";
    if trace {
        let _ = writeln!(
            out,
            "    {{\"kind\": \"short_five\", \"mode\": \"{}\", {refs}}},",
            mode.as_str()
        );
        let _ = writeln!(out, "    {{\"kind\": \"short_five_trace\", {refs}}}");
    } else {
        let _ = writeln!(
            out,
            "    {{\"kind\": \"short_five\", \"mode\": \"{}\", {refs}}}",
            mode.as_str()
        );
    }
    let _ = writeln!(out, "  ]");
    let _ = writeln!(out, "}}");
    out
}
