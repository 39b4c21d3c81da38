//! Cyclic quotients of the images of the Torelli group under the degree-1
//! and degree-2 truncations of the expansion.

mod degree1;
mod degree2;
mod lattice;
mod nilpotent;

use std::fmt;

pub use degree1::{
    cyclic_order_degree1, cyclic_order_in, orbit_lattice_degree1, order_by_denominators,
    Degree1Quotient, OrbitLattices,
};
pub use degree2::{
    cyclic_order_degree2, generator_conjugators, normal_closure, order_in, phi2, words_up_to,
    Conjugator, Degree2Quotient,
};
pub use lattice::{
    hnf, rational_quotient_divisors, smith_diagonal, snf_quotient, IntegerLattice, RationalLattice,
};
pub use nilpotent::{
    flatten, nilpotent_membership, nilpotent_subgroup_closure, NilpotentElement,
    NilpotentSubgroupData,
};

pub const DEFAULT_ORDER_CAP: u64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicOrder {
    Finite(u64),
    Infinite,
    ExceedsCap(u64),
}

impl CyclicOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            CyclicOrder::Finite(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicOrder::Finite(n) => write!(f, "{n}"),
            CyclicOrder::Infinite => write!(f, "infinite"),
            CyclicOrder::ExceedsCap(c) => write!(f, "exceeds cap {c}"),
        }
    }
}
