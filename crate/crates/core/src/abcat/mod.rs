//! The abelian-category contract and its category-generic constructions.
//!
//! A [`AbelianCategory`] instance supplies hom-set arithmetic, a zero
//! object, direct sums, kernels and cokernels together with their universal
//! factorizations. Everything else — classification of morphisms, image
//! factorizations, pullbacks, pushouts, exactness — is derived in
//! [`ops`] from the contract alone, so it works uniformly for every
//! instance, including the formal opposite.

pub mod laws;
mod opposite;
pub mod ops;

pub use opposite::{opposite_instance, Opposite};
pub use ops::{
    classify_morphism, factor_through_image, image_factorization, is_exact_at, is_short_exact,
    pullback, pullback_mediator, pushout, pushout_mediator, quotients_equal, subobjects_equal,
    ShortExactVerdict,
};

use crate::error::Result;

/// A kernel: the object `K_f` together with the inclusion `K_f -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelData<O, M> {
    pub object: O,
    pub inclusion: M,
}

/// A cokernel: the object `C_f` together with the projection `B -> C_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelData<O, M> {
    pub object: O,
    pub projection: M,
}

/// A biproduct `A (+) B` with its injections and projections.
///
/// The five identities `proj_a inj_a = id`, `proj_b inj_b = id`,
/// `proj_a inj_b = 0`, `proj_b inj_a = 0` and
/// `inj_a proj_a + inj_b proj_b = id` make it both a product and a
/// coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumData<O, M> {
    pub object: O,
    pub inj_a: M,
    pub inj_b: M,
    pub proj_a: M,
    pub proj_b: M,
}

/// Factorization of `f : A -> B` as a canonical epi followed by a mono:
/// `image_mono . canonical_epi = f`, with the coimage from the dual
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageFactorization<O, M> {
    pub image_object: O,
    /// `I_f -> B`, the kernel of the cokernel of `f`.
    pub image_mono: M,
    /// `A -> I_f`; always epic.
    pub canonical_epi: M,
    pub coimage_object: O,
    /// `A -> Coim_f`, the cokernel of the kernel of `f`.
    pub coimage_epi: M,
}

/// A pullback square for `phi : A -> C`, `psi : B -> C`, realized as the
/// kernel of the difference map `omega = phi proj_a - psi proj_b` on
/// `A (+) B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackData<O, M> {
    pub object: O,
    pub proj_a: M,
    pub proj_b: M,
    /// `omega : A (+) B -> C`; the pullback object is its kernel, which is
    /// what makes mediators computable by factoring through that kernel.
    pub witness_omega: M,
}

/// A pushout square for `phi' : C -> A`, `psi' : C -> B`, realized as the
/// cokernel of `delta = inj_a phi' - inj_b psi' : C -> A (+) B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutData<O, M> {
    pub object: O,
    pub inj_a: M,
    pub inj_b: M,
    /// `delta : C -> A (+) B`; the pushout object is its cokernel.
    pub witness_delta: M,
}

/// Monic/epic/iso flags for a morphism, with a two-sided inverse when it is
/// an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismClassification<M> {
    pub monic: bool,
    pub epic: bool,
    pub iso: bool,
    pub inverse: Option<M>,
}

/// Capability contract for a concrete abelian category.
///
/// Implementations must be pure values: no interior mutability, safe to
/// share across threads. Morphism handles carry their own endpoints, which
/// the instance reports through [`source`](Self::source) and
/// [`target`](Self::target).
///
/// Kernels and cokernels are unique only up to unique isomorphism; an
/// instance returns one canonical representative per input and all derived
/// comparisons go through subobject/quotient equality rather than raw
/// morphism equality.
pub trait AbelianCategory {
    type Object: Clone + PartialEq + std::fmt::Debug;
    type Morphism: Clone + PartialEq + std::fmt::Debug;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;

    fn object_equal(&self, a: &Self::Object, b: &Self::Object) -> bool;
    fn zero_object(&self) -> Self::Object;
    fn is_zero_object(&self, a: &Self::Object) -> bool;

    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    fn zero_morphism(&self, a: &Self::Object, b: &Self::Object) -> Self::Morphism;

    /// `g . f` (apply `f` first). Errors when the endpoints do not line up.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    /// Hom-set addition. Errors when the morphisms are not parallel.
    fn add(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn negate(&self, f: &Self::Morphism) -> Self::Morphism;
    fn morphism_equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool;

    fn direct_sum(
        &self,
        a: &Self::Object,
        b: &Self::Object,
    ) -> DirectSumData<Self::Object, Self::Morphism>;

    fn kernel(&self, f: &Self::Morphism) -> KernelData<Self::Object, Self::Morphism>;
    fn cokernel(&self, f: &Self::Morphism) -> CokernelData<Self::Object, Self::Morphism>;

    /// The unique `h` with `kernel(f).inclusion . h = g`, defined when
    /// `f . g = 0`.
    fn factor_through_kernel(
        &self,
        f: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism>;

    /// The unique `h` with `h . cokernel(f).projection = g`, defined when
    /// `g . f = 0`.
    fn factor_through_cokernel(
        &self,
        f: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism>;

    /// Solves `m . x = g` for a monomorphism `m`. This is the subobject
    /// universal property in computable form; instances realize it with
    /// their exact solvers. Errors when `g` does not factor through `m`.
    fn factor_through_mono(
        &self,
        m: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism>;

    /// Solves `x . e = g` for an epimorphism `e`; dual to
    /// [`factor_through_mono`](Self::factor_through_mono).
    fn factor_through_epi(&self, e: &Self::Morphism, g: &Self::Morphism)
        -> Result<Self::Morphism>;

    /// True when `f` is the zero morphism of its hom-set.
    fn is_zero_morphism(&self, f: &Self::Morphism) -> bool {
        let z = self.zero_morphism(&self.source(f), &self.target(f));
        self.morphism_equal(f, &z)
    }
}
