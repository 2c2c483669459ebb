//! Braided differentials and exact homology.
//!
//! ```
//! use braidhom::structures::{shelf_braiding, ShelfTable};
//! use braidhom::braiding::{check_braided_character, check_ybe};
//! use braidhom::{integral_homology, named_complex, NamedComplex, NamedParams, ZSpace};
//!
//! let mut space: ZSpace = shelf_braiding(&ShelfTable::dihedral(3));
//! assert!(check_ybe(&mut space).passed);
//! check_braided_character(&mut space, "one")?;
//! let c = named_complex(&space, NamedComplex::Quandle, 4, &NamedParams::default())?;
//! println!("{}", integral_homology(&c));
//! # Ok::<(), braidhom::Error>(())
//! ```
pub mod braiding;
pub mod complexes;
pub mod error;
pub mod exactlin;
pub mod homology;
pub mod report;
pub mod structures;

pub use complexes::{named_complex, DifferentialSpec, NamedComplex, NamedParams, Side};
pub use error::{Error, Result};
pub use exactlin::{Field, Fp, Scalar, SparseLinearMap};
pub use homology::{assemble, betti, integral_homology, ChainComplex, HomologyReport};
pub use braiding::PreBraidedSpace;

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type ZMap = SparseLinearMap<Integer>;
pub type QMap = SparseLinearMap<Rational>;
pub type ZSpace = PreBraidedSpace<Integer>;
pub type QSpace = PreBraidedSpace<Rational>;
pub type ZComplex = ChainComplex<Integer>;
pub type QComplex = ChainComplex<Rational>;
