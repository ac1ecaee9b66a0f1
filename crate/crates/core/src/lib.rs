//! Semistandard tableaux of shape `(m, n^b)` under jeu-de-taquin promotion.
//!
//! The crate enumerates `SSYT(shape, content)`, applies promotion, computes
//! charge and cocharge with their Kostka-Foulkes generating functions, and
//! checks the cyclic sieving of `promote^(b+2)` against the q-binomial
//! `[b + beta, beta]_q` with exact integer arithmetic throughout.

pub mod bijection;
pub mod csp;
pub mod enumeration;
pub mod error;
pub mod partition;
pub mod poly;
pub mod promotion;
pub mod statistics;
pub mod sweep;
pub mod tableau;

pub use bijection::{beta_profile, free_arm_entries, phi, phi_inverse, psi, FreeEntryProfile, Multiset};
pub use csp::{
    count_fixed_points, eval_at_root_of_unity, multiset_fixed_oracle, verify_csp, verify_kostka_link,
    CspReport, ExponentRecord,
};
pub use enumeration::{enumerate_generic, enumerate_hook_arm, SsytFamily};
pub use error::{Error, Result};
pub use partition::{Composition, Partition};
pub use poly::{q_binomial, IntPolynomial};
pub use promotion::{orbit, promote, promote_power, promotion_order_on_family, PromotionOrbit};
pub use statistics::{
    charge_permutation, cocharge_permutation, cocharge_tableau, cocharge_word, kostka_foulkes,
    modified_kostka_foulkes, plane_partition_of, standard_subwords, PlanePartitionRow,
    SubwordDecomposition,
};
pub use sweep::{hook_arm_corpus, CorpusBounds};
pub use tableau::{validate_ssyt, HookArmShape, Tableau};
