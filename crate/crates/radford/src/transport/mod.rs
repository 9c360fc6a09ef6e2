//! From modules over the double to Yetter-Drinfeld modules over the
//! generalized Taft algebra, through `H`, `R` and a cocycle twist, and the
//! braidings they carry.

mod braided;
mod functors;
mod lambda;
mod yd;

pub use braided::BraidedSpace;
pub use functors::{
    beta, f1, f1_closed, f2, f2_closed, f3, f3_closed, transport, transport_all, twist, Hosts, F3_SIGN,
};
pub use lambda::{build_L, check_corresp, group_pair, lambda_dim};
pub use yd::{CoTerm, YDModule};

/// The braiding of `Y`, with the braid equation and invertibility checked.
pub fn braiding_of(y: &YDModule) -> crate::Result<BraidedSpace> {
    y.braiding()
}
