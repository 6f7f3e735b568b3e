//! Exact evaluation of the cutwidth lower bounds in terms of degeneracy and
//! uniform sparsity, their corollaries, and the Turán envelope.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ceil_int, ceil_times, from_usize, int, Rational};
use crate::sparsity::SparsityParams;

fn usize_q(v: usize) -> Rational {
    from_usize(v)
}

/// `c (δ - (c - 1)/λ)` with `c = ceil(ρn)`. Nonpositive values are vacuous.
pub fn bound_eq_main2(n: usize, delta: usize, params: &SparsityParams) -> Rational {
    let c = usize_q(ceil_times(&params.rho, n));
    let slack = (&c - int(1)) / &params.lambda;
    &c * (usize_q(delta) - slack)
}

/// `(δλ + 1)^2 / (4λ) - 1/λ`, a strict lower bound when [`guard_eq_main`]
/// holds.
pub fn bound_eq_main(delta: usize, lambda: &Rational) -> Rational {
    let x = usize_q(delta) * lambda + int(1);
    &x * &x / (int(4) * lambda) - int(1) / lambda
}

/// `2nρ <= δλ - 1`.
pub fn guard_eq_main(n: usize, delta: usize, params: &SparsityParams) -> bool {
    int(2) * usize_q(n) * &params.rho <= usize_q(delta) * &params.lambda - int(1)
}

/// Prefix position at which the strict bound is read off:
/// `floor((δλ + 1)/2)`.
pub fn eq_main_position(delta: usize, lambda: &Rational) -> BigInt {
    ((usize_q(delta) * lambda + int(1)) / int(2)).floor().to_integer()
}

/// Fractional part `ε` of `(δλ + 1)/2`, in `[0, 1)`.
pub fn eq_main_epsilon(delta: usize, lambda: &Rational) -> Rational {
    let x = (usize_q(delta) * lambda + int(1)) / int(2);
    let floor = x.floor();
    x - floor
}

/// Lower bound on the cut after the first `i` vertices of any ordering of a
/// graph with minimum degree `δ` whose `i`-vertex induced subgraphs are
/// λ-sparse: `iδ - (i^2 - i)/λ`.
pub fn prefix_bound(i: &Rational, delta: usize, lambda: &Rational) -> Rational {
    i * usize_q(delta) - (i * i - i) / lambda
}

/// First 1-based prefix length whose cut falls below [`prefix_bound`], if any.
pub fn prefix_violation(profile: &[usize], delta: usize, lambda: &Rational) -> Option<usize> {
    (1..=profile.len()).find(|&i| usize_q(profile[i - 1]) < prefix_bound(&usize_q(i), delta, lambda))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralBound {
    /// `δ^2/4 + δ/2`.
    pub value: Rational,
    /// Smallest integer not below `value`, the cutwidth floor it implies.
    pub threshold: BigInt,
}

pub fn bound_general(delta: usize) -> GeneralBound {
    let d = usize_q(delta);
    let value = &d * &d / int(4) + &d / int(2);
    let threshold = ceil_int(&value);
    GeneralBound { value, threshold }
}

/// `δ^2 / 2` for triangle-free graphs.
pub fn bound_triangle_free(delta: usize) -> Rational {
    let d = usize_q(delta);
    &d * &d / int(2)
}

/// `k δ^2 / (4(k-1)) - (k-1)/k` for graphs without `K_{k+1}`.
pub fn bound_clique_free(delta: usize, k: usize) -> Result<Rational> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("clique-free bound needs k >= 2, got {k}")));
    }
    let d = usize_q(delta);
    let k = usize_q(k);
    let km1 = &k - int(1);
    Ok(&k * &d * &d / (int(4) * &km1) - &km1 / &k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranEnvelope {
    #[serde(with = "crate::rational::serde_str")]
    pub lower: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub upper: Rational,
}

/// Quadratic lower and upper bounds on `cw(Tur(n, k))`:
/// `(k-1)/k · n²/4 ∓ n/2` with constants `-3k/(4(k-1))` and `+k/(4(k-1))`.
pub fn turan_envelope(n: usize, k: usize) -> Result<TuranEnvelope> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("Turán envelope needs k >= 2, got {k}")));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("Turán envelope needs n >= 1".into()));
    }
    let nq = usize_q(n);
    let kq = usize_q(k);
    let km1 = &kq - int(1);
    let main = &km1 / &kq * &nq * &nq / int(4);
    let half_n = &nq / int(2);
    let lower = &main - &half_n - int(3) * &kq / (int(4) * &km1);
    let upper = &main + &half_n + &kq / (int(4) * &km1);
    Ok(TuranEnvelope { lower, upper })
}
