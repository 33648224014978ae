use super::{AbelianCategory, CokernelData, DirectSumData, KernelData};
use crate::error::Result;

/// The formal opposite of a category instance.
///
/// Objects and morphism handles are unchanged; only their reading flips:
/// sources become targets, composition reverses, kernels delegate to
/// cokernels and injections trade places with projections. Wrapping twice
/// restores the original behavior.
#[derive(Clone, Debug)]
pub struct Opposite<C>(pub C);

/// Convenience constructor mirroring the other derived operations.
pub fn opposite_instance<C: AbelianCategory + Clone>(cat: &C) -> Opposite<C> {
    Opposite(cat.clone())
}

impl<C: AbelianCategory> AbelianCategory for Opposite<C> {
    type Object = C::Object;
    type Morphism = C::Morphism;

    fn source(&self, f: &Self::Morphism) -> Self::Object {
        self.0.target(f)
    }

    fn target(&self, f: &Self::Morphism) -> Self::Object {
        self.0.source(f)
    }

    fn object_equal(&self, a: &Self::Object, b: &Self::Object) -> bool {
        self.0.object_equal(a, b)
    }

    fn zero_object(&self) -> Self::Object {
        self.0.zero_object()
    }

    fn is_zero_object(&self, a: &Self::Object) -> bool {
        self.0.is_zero_object(a)
    }

    fn identity(&self, a: &Self::Object) -> Self::Morphism {
        self.0.identity(a)
    }

    fn zero_morphism(&self, a: &Self::Object, b: &Self::Object) -> Self::Morphism {
        self.0.zero_morphism(b, a)
    }

    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism> {
        // g .op f = f . g
        self.0.compose(f, g)
    }

    fn add(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism> {
        self.0.add(f, g)
    }

    fn negate(&self, f: &Self::Morphism) -> Self::Morphism {
        self.0.negate(f)
    }

    fn morphism_equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool {
        self.0.morphism_equal(f, g)
    }

    fn direct_sum(
        &self,
        a: &Self::Object,
        b: &Self::Object,
    ) -> DirectSumData<Self::Object, Self::Morphism> {
        let ds = self.0.direct_sum(a, b);
        DirectSumData {
            object: ds.object,
            inj_a: ds.proj_a,
            inj_b: ds.proj_b,
            proj_a: ds.inj_a,
            proj_b: ds.inj_b,
        }
    }

    fn kernel(&self, f: &Self::Morphism) -> KernelData<Self::Object, Self::Morphism> {
        let c = self.0.cokernel(f);
        KernelData {
            object: c.object,
            inclusion: c.projection,
        }
    }

    fn cokernel(&self, f: &Self::Morphism) -> CokernelData<Self::Object, Self::Morphism> {
        let k = self.0.kernel(f);
        CokernelData {
            object: k.object,
            projection: k.inclusion,
        }
    }

    fn factor_through_kernel(
        &self,
        f: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism> {
        self.0.factor_through_cokernel(f, g)
    }

    fn factor_through_cokernel(
        &self,
        f: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism> {
        self.0.factor_through_kernel(f, g)
    }

    fn factor_through_mono(
        &self,
        m: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism> {
        self.0.factor_through_epi(m, g)
    }

    fn factor_through_epi(
        &self,
        e: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism> {
        self.0.factor_through_mono(e, g)
    }
}
