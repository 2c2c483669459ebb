//! Structural pre-braidings built from shelves, associative and Leibniz algebras and
//! coalgebras, together with the axiom checks they encode.

pub mod algebra;
pub mod basic;
pub mod shelf;

pub use algebra::{
    adjoin_unit, algebra_character_check, assoc_braiding, check_assoc, check_coassoc, check_leibniz, coalgebra_extend,
    coassoc_braiding, cyclic_group_algebra, dual_algebra, dual_coalgebra, group_algebra, leibniz_braiding,
    lie_character_check, sl2, truncated_polynomial, AlgebraData, AlgebraKind, AxiomReport, AUGMENTATION, COUNIT,
};
pub use basic::{flip_braiding, koszul_braiding, q_flip_braiding, q_flip_diagonal, signed_flip_braiding};
pub use shelf::{
    check_shelf, diagonal_comultiplication, dirac_character, shelf_braiding, tetrahedral_quandle, twist_character,
    ShelfReport, ShelfTable, SHELF_COUNIT,
};

use crate::exactlin::Scalar;

/// The algebraic input a structural braiding was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructurePayload<R: Scalar> {
    Shelf(ShelfTable),
    Algebra(AlgebraData<R>),
}
