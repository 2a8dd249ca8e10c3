//! The group `G₀ = A *_U B`: letters, words, reduced forms and the action
//! on Calogero-Moser points.

pub mod families;
pub mod letter;
pub mod normal_form;
pub mod plane;
pub mod random;
pub mod word;

pub use families::{phi_x, Family, ALL_FAMILIES};
pub use letter::{affine_rep, AffineGen, Factor, Letter, TriangularGen, UGen};
pub use normal_form::{as_single_letter, is_identity, normal_form, NormalForm};
pub use plane::{jacobian, project_to_plane, BiPoly};
pub use random::{random_letter, random_word, random_word_of_len, WordBounds};
pub use word::{is_translation_word, phi, psi, scaling, stabilizes_basepoint, swap, translation, Word};
