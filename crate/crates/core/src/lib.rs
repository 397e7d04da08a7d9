//! Grid diagrams, braid words, the tilde grid complex over GF(2) and
//! HOMFLY-PT skein computation, put together to certify transversely
//! nonsimple knot pairs.
//!
//! Public indices (columns, rows, strands, grid states) are one-based.

pub mod braid;
pub mod config;
pub mod diagram;
pub mod family;
pub mod floer;
pub mod gf2;
pub mod grid;
pub mod homfly;

// The book's code blocks run as doctests.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/intro.md")]
mod book_intro {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/grids.md")]
mod book_grids {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/braids.md")]
mod book_braids {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/floer.md")]
mod book_floer {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/homfly.md")]
mod book_homfly {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/family.md")]
mod book_family {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
