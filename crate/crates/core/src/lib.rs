//! Exact-arithmetic counting of tree modules and Kac polynomials for quivers.
//!
//! The crate is organized around three pipelines that cross-validate each other:
//!
//! * a combinatorial pipeline that enumerates oriented tree quivers, counts
//!   winding labelings through chromatic polynomials of conflict graphs, and
//!   assembles tree-module counts for loop quivers as polynomials in the loop
//!   number `g` (binomial basis);
//! * a representation-theoretic pipeline that builds pushforward
//!   representations of tree modules explicitly and decides (absolute)
//!   indecomposability and isomorphism with exact linear algebra;
//! * an arithmetic pipeline that computes Kac polynomials from the plethystic
//!   logarithm of Hua's partition series, with a finite-field brute-force
//!   oracle for small instances.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`); nothing is floated.

pub mod catalog;
pub mod counter;
pub mod error;
pub mod exact;
pub mod field;
pub mod kac;
pub mod matrix;
pub mod quiver;
pub mod rep;
pub mod verify;

pub use catalog::conflict::{conflict_graph, winding_counts, ConflictGraph};
pub use catalog::{enumerate_tree_quivers, labeled_orbit_census, Catalog, TreeQuiverEntry};
pub use counter::{
    leading_term_check, tm_count, tm_count_vector, tm_sg, tm_sg_bruteforce, TmCount, TmSgReport,
    TreeModuleClass,
};
pub use error::{CoreError, Result};
pub use exact::binom::BinomialPolyG;
pub use exact::interp::lagrange_interpolate;
pub use exact::partition::{partitions_of, Partition};
pub use exact::polyq::PolyQ;
pub use exact::scalar::{Int, Rat};
pub use field::{Field, FieldSpec, Gf, Rationals};
pub use kac::ff_oracle::count_abs_indec_ff;
pub use kac::hua::{hua_series_at, BoxSeries};
pub use kac::{
    euler_form, hrv_leading_check, kac_at_one_in_g, kac_polynomial, selected_recipe, KacResult,
    Recipe,
};
pub use matrix::Matrix;
pub use quiver::{Arrow, DimVector, Quiver, QuiverMorphism};
pub use rep::hom::{hom_dim, hom_space};
pub use rep::indec::{is_indecomposable, IndecResult};
pub use rep::iso::{is_isomorphic, IsoResult};
pub use rep::{direct_sum, pullback, pushforward, tree_identity_rep, Rep};
pub use verify::{check_names, verify_all, CheckOutcome, VerifyOptions, VerifyReport};
