//! Chain-level cup-`i` products and Steenrod squares on ordered simplicial
//! complexes.
//!
//! Cochains take values in `Z` or `Z/M` ([`Ring`]). [`cup::cup_product`]
//! computes `c ⌣_n c'` from the supports of the two cochains,
//! [`steenrod::sq`] computes `Sq^i(c) = c ⌣_{j-i} c` over `Z_2`, and the
//! per-simplex evaluators in [`cup`] give two further routes (the full
//! enumeration over all index tuples and the restricted one) used to check
//! them. [`counting`] has the closed-form summand counts and [`verify`] the
//! mod-2 linear algebra for coboundary membership and Betti numbers.
//!
//! ```
//! use cupsq::{cup, Cochain, Ring, Simplex, SimplicialComplex};
//!
//! let k = SimplicialComplex::from_lists([vec![0, 1, 2]]).unwrap();
//! let edges = Cochain::indicator(1, Ring::Z2, k.simplices_of_dim(1)).unwrap();
//! let product = cup::cup_product(&edges, &edges, 0, &k).unwrap();
//! assert_eq!(product.len(), 1);
//! assert!(product.terms().contains_key(&Simplex::new(vec![0, 1, 2]).unwrap()));
//! ```

pub mod cochain;
pub mod counting;
pub mod cup;
pub mod error;
pub mod ring;
pub mod simplicial;
pub mod steenrod;
pub mod verify;
pub mod words;

pub use cochain::{coboundary, differential, evaluate, is_cocycle, Cochain, FormalSum};
pub use error::{Error, Result};
pub use ring::{Ring, RingElement};
pub use simplicial::{intersection, Simplex, SimplicialComplex, Vertex};
