//! Cochain complexes, de Rham and invariant-form cohomology, the Hopf
//! cochain (Amitsur) complexes and Künneth checks.

pub mod amitsur;
pub mod complex;
pub mod invariant;
pub mod kunneth;

pub use amitsur::{amitsur_complex, homotopy_check, hopf_module_law, theta_iso, HomotopyReport, ThetaIso, Variant, AMITSUR_CAP};
pub use complex::{CochainComplex, CohomologyResult, ComplexMap};
pub use invariant::{coaction_on_cohomology, coinvariant_subcomplex, connectedness, invariant_forms_check, CoactionReport, InvariantFormsReport};
pub use kunneth::{kunneth_check, KunnethReport};
