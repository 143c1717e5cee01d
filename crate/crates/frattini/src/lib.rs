//! Finite permutation-group computations built around one equivalence: a
//! subgroup `K` of a finite group `G` is normal exactly when the product
//! `K·N_G(P)` covers `G` for every Sylow subgroup `P` of `K`.
//!
//! The crate provides:
//!
//! - [`perm`]: permutation arithmetic and cycle-notation parsing;
//! - [`group`] / [`subgroup`]: exact element tables, normalizers, product
//!   sets, normality tests and exhaustive subgroup enumeration;
//! - [`sylow`]: deterministic Sylow p-subgroups and their conjugation
//!   orbits;
//! - [`argument`]: both directions of the coverage/normality equivalence
//!   and the machinery (coset decompositions, shortest Sylow words) behind
//!   certificates;
//! - [`certificate`]: replayable normality certificates with an independent
//!   checker and a stable text format;
//! - [`catalog`] / [`sweep`]: standard group constructors, a group-file
//!   format, and the exhaustive verification harness.
//!
//! Products read left to right everywhere: `p.compose(&q)` applies `p`
//! first. See the `examples/` directory for a runnable tour, and the
//! `frattini` binary for the command-line interface.
//!
//! ```
//! use frattini::{converse_verdict, make_symmetric, Permutation, Subgroup};
//!
//! let g = make_symmetric(3).unwrap();
//! let k = Subgroup::generated(&g, &[Permutation::parse_cycles("(1 2 3)", 3).unwrap()]).unwrap();
//! let verdict = converse_verdict(&g, &k).unwrap();
//! assert!(verdict.condition_holds && verdict.normal && verdict.consistent);
//! ```

pub mod argument;
pub mod catalog;
pub mod certificate;
pub mod group;
pub mod perm;
pub mod subgroup;
pub mod sweep;
pub mod sylow;

pub use argument::{
    converse_verdict, decompose_in_product, frattini_condition, frattini_condition_scoped,
    frattini_forward, sylow_word, word_product, FrattiniError, FrattiniReport, SylowScope,
    Verdict, WordLetter,
};
pub use catalog::{
    direct_product, format_group_file, load_group_file, make_alternating, make_cyclic,
    make_dihedral, make_quaternion, make_symmetric, parse_group_file, save_group_file,
    CatalogError,
};
pub use certificate::{
    build_certificate, check_certificate, CertParseError, CheckFailure, ConjugatedLetter,
    CosetDecomposition, NormalityCertificate,
};
pub use group::{Group, GroupError, DEFAULT_ENUMERATION_CAP};
pub use perm::{PermError, Permutation};
pub use subgroup::{
    all_subgroups, all_subgroups_with_cap, conjugate_subgroup, intersection_order, is_normal,
    normalizer, product_set, ProductSet, Subgroup, SubgroupError,
};
pub use sweep::{
    default_catalog, sweep, SweepCase, SweepError, SweepReport, SweepTotals, DEFAULT_MAX_ORDER,
};
pub use sylow::{all_sylow, all_sylow_subgroups, p_part, sylow_classes, sylow_subgroup, SylowClass, SylowError};
