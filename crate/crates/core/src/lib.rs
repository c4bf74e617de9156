//! Exact multiplicative Zagreb indices and distance-k domination of trees,
//! with exhaustive enumeration over isomorphism classes, constructors for
//! the extremal families, and a verification harness that scans every
//! bound and equality characterization over small orders.

pub mod canon;
pub mod domination;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod indices;
pub mod transforms;
pub mod tree;
pub mod verify;

pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use domination::{
    gamma_k, gamma_k_bruteforce, is_k_dominating, private_k_neighbors, removable_pendants,
    DominationResult,
};
pub use enumeration::{free_trees, labeled_trees_prufer, prufer_decode};
pub use error::{Error, Result};
pub use families::{closed_form_pi1, closed_form_pi2, corona, corona_decompose, path, star,
    t_a_nk2, t_nks, FamilySpec};
pub use indices::{
    f_aux, first_zagreb, g_ratio, h_aux, pi1, pi2, pi2_vertex_form, second_zagreb, ExactNat,
    ExactRatio,
};
pub use transforms::{contract_pend, move_pendants};
pub use tree::Tree;
