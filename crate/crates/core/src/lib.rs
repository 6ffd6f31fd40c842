//! Exact Chern-number obstructions to endomorphisms of complete
//! intersections, and the Picard-lattice arithmetic deciding which Del Pezzo
//! surfaces admit endomorphisms of degree greater than one.
//!
//! * [`series`]: exact rationals and truncated power series in `h`.
//! * [`residue`]: residues of rational functions at simple poles and infinity.
//! * [`chern`]: Chern classes of `Ω¹_X(t)`, the closed form, the residue
//!   cross-check and the obstruction verdict.
//! * [`delpezzo`]: exceptional classes in `Z^{1,r}`, the feasibility verdict,
//!   ramification arithmetic and toric power maps.
//! * [`report`]: sweeps and table/JSON/CSV report rows used by the
//!   `chern-endo` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod chern;
pub mod delpezzo;
pub mod error;
pub mod report;
pub mod residue;
pub mod series;

pub use chern::{
    arv_obstruction, chern_number, closed_form_c_n, closed_form_residues, residue_bundle,
    theorem_inequality_chain, twist_leading_coefficient, twisted_cotangent_chern_series,
    CompleteIntersection, ObstructionReport, ReportNote, ResidueBundle, Verdict,
};
pub use error::{Error, Result};
pub use series::{Rational, TruncatedSeries};
