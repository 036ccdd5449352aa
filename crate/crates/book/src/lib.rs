//! Every chapter of the book as a module, so `cargo test` runs its listings.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/balance.md")]
pub mod balance {}
#[doc = include_str!("../../../book/src/girth.md")]
pub mod girth {}
#[doc = include_str!("../../../book/src/coloring.md")]
pub mod coloring {}
#[doc = include_str!("../../../book/src/kneser.md")]
pub mod kneser {}
#[doc = include_str!("../../../book/src/peel.md")]
pub mod peel {}
#[doc = include_str!("../../../book/src/certificates.md")]
pub mod certificates {}
#[doc = include_str!("../../../book/src/search.md")]
pub mod search {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
