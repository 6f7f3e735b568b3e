use super::{profile_unchecked, LinearOrdering};
use crate::error::{Error, Result};
use crate::generators::turan_modular;
use crate::graph::Graph;
use crate::rational::{from_usize, Rational};

/// The modular Turán graph (`a ~ b` iff `a mod k != b mod k`) with its
/// natural ordering `0, 1, ..., n-1`.
pub fn turan_natural_ordering(n: usize, k: usize) -> Result<(Graph, LinearOrdering)> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "natural Turán ordering needs n >= 1 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    let g = turan_modular(n, k)?;
    let order: Vec<_> = (0..n).collect();
    let profile = profile_unchecked(&g, &order);
    Ok((g, LinearOrdering { order, profile }))
}

/// `c(i) = i * ((n - i)(k - 1)/k + 1)`, an upper bound on the number of edges
/// crossing the gap after the first `i` vertices of the natural ordering.
/// Each of the `i` left vertices reaches at most `(k-1)(n-i)/k + 1` right
/// vertices outside its residue class.
pub fn turan_crossing_bound(n: usize, k: usize, i: usize) -> Result<Rational> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("crossing bound needs k >= 2, got {k}")));
    }
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("position {i} outside 1..={n}")));
    }
    let per_source =
        from_usize(n - i) * Rational::new((k as i64 - 1).into(), (k as i64).into()) + from_usize(1);
    Ok(from_usize(i) * per_source)
}

/// Largest `c(i)` over integer positions `1..=n`.
pub fn turan_crossing_bound_max(n: usize, k: usize) -> Result<Rational> {
    (1..=n)
        .map(|i| turan_crossing_bound(n, k, i))
        .try_fold(None::<Rational>, |acc, c| {
            let c = c?;
            Ok(Some(match acc {
                Some(a) if a >= c => a,
                _ => c,
            }))
        })?
        .ok_or_else(|| Error::InvalidArgument("n must be at least 1".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn crossing_bound_values() {
        assert_eq!(turan_crossing_bound(12, 3, 6).unwrap(), int(30));
        for n in 1..10 {
            assert_eq!(turan_crossing_bound(n, 3, n).unwrap(), from_usize(n));
        }
        assert_eq!(turan_crossing_bound(6, 3, 1).unwrap(), ratio(13, 3));
        assert!(turan_crossing_bound(6, 1, 2).is_err());
        assert!(turan_crossing_bound(6, 3, 0).is_err());
        assert!(turan_crossing_bound(6, 3, 7).is_err());
    }

    #[test]
    fn natural_ordering_under_pointwise_bound() {
        // exact crossing counts from direct enumeration of Tur(12,3)'s 48 edges
        let (g, lo) = turan_natural_ordering(12, 3).unwrap();
        assert_eq!(g.m(), 48);
        assert_eq!(lo.profile, vec![8, 14, 18, 22, 24, 24, 24, 22, 18, 14, 8, 0]);
        for (i, &x) in lo.profile.iter().enumerate() {
            assert!(from_usize(x) <= turan_crossing_bound(12, 3, i + 1).unwrap());
        }
        let (_, lo) = turan_natural_ordering(6, 3).unwrap();
        assert_eq!(lo.profile, vec![4, 6, 6, 6, 4, 0]);
        assert!(from_usize(lo.width()) <= turan_crossing_bound_max(6, 3).unwrap());
        assert_eq!(turan_crossing_bound_max(6, 3).unwrap(), ratio(28, 3));
    }

    #[test]
    fn degenerate_parameters() {
        for n in 1..9 {
            let (_, lo) = turan_natural_ordering(n, n).unwrap();
            assert_eq!(lo.width(), n * n / 4);
            let (g, lo) = turan_natural_ordering(n, 1).unwrap();
            assert_eq!(g.m(), 0);
            assert!(lo.profile.iter().all(|&x| x == 0));
        }
        assert!(turan_natural_ordering(0, 2).is_err());
    }
}
