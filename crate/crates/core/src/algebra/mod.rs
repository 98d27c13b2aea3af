//! Graded Poincaré duality algebras from a volume polynomial (quotient of the
//! constant-coefficient operators by the annihilator of `P`) or from a
//! symmetric multilinear form (quotient of the symmetric algebra by the kernel
//! of `F`), and their instantiation from generator polytopes.

mod forms;
mod pd;

pub use forms::{
    apply_operator, mixed_volume_tensor, monomials, multinomial, volume_polynomial,
    DiffOperatorMonomial, HomogeneousForm, Monomial, SymmetricForm,
};
pub use pd::{
    build_algebra_from_form, build_algebra_from_polynomial, check_equivalence, self_intersection,
    Construction, Element, GradedPDAlgebra,
};
