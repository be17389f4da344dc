//! Closed-form class lists the decomposition engine is checked against.

use std::collections::BTreeMap;

use crate::gaussian::Q;
use crate::rd_modules::RdParams;

/// `k/2` as a scalar.
fn half(k: i64) -> Q {
    Q::frac(k, 2)
}

fn params(d: i64, a: Q, b: Q, c: Q) -> RdParams {
    RdParams::new(a, b, c, d as usize)
}

/// Which vectors span a piece of an even half, in the basis `u_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Part {
    /// The whole half.
    Whole,
    /// `u_i − u_{sum−i}` for `0 ≤ i < count`.
    Minus { count: usize, sum: usize },
    /// `u_i + u_{sum−i}` for `0 ≤ i < count`.
    Plus { count: usize, sum: usize },
}

impl Part {
    /// Coordinate vectors of the spanning set inside a half of dimension `m`.
    pub fn vectors(self, m: usize) -> Vec<Vec<Q>> {
        let unit = |i: usize| {
            let mut v = vec![Q::ZERO; m];
            v[i] = Q::ONE;
            v
        };
        match self {
            Part::Whole => (0..m).map(unit).collect(),
            Part::Minus { count, sum } | Part::Plus { count, sum } => {
                let sign = if matches!(self, Part::Minus { .. }) {
                    -Q::ONE
                } else {
                    Q::ONE
                };
                (0..count)
                    .map(|i| {
                        let mut v = unit(i);
                        v[sum - i] += &sign;
                        v
                    })
                    .collect()
            }
        }
    }
}

/// The summands of `L_n^(parity)` as an `ℜ`-module with their spanning parts.
pub fn half_table(n: usize, parity: u8) -> Vec<(Part, RdParams)> {
    let q = Q::frac(-1, 4);
    let ni = n as i64;
    match (parity, n % 4) {
        (_, 1) | (_, 3) => vec![(Part::Whole, params((ni - 1) / 2, q.clone(), q.clone(), q))],
        (0, 0) if n == 0 => vec![(Part::Whole, params(0, half(-1), half(-1), half(-1)))],
        (0, 0) => {
            let d = ni / 4;
            let (count, sum) = (d as usize, 2 * d as usize);
            vec![
                (
                    Part::Minus { count, sum },
                    params(d - 1, half(d - 1), half(d), half(d - 1)),
                ),
                (
                    Part::Plus { count: count + 1, sum },
                    params(d, half(d - 1), half(d - 1), half(d - 1)),
                ),
            ]
        }
        (0, _) => {
            let d = (ni - 2) / 4;
            let (count, sum) = (d as usize + 1, 2 * d as usize + 1);
            vec![
                (Part::Minus { count, sum }, params(d, half(d - 1), half(d), half(d))),
                (Part::Plus { count, sum }, params(d, half(d), half(d), half(d - 1))),
            ]
        }
        (_, 2) if n == 2 => vec![(Part::Whole, params(0, Q::ZERO, half(-1), Q::ZERO))],
        (_, 2) => {
            let d = (ni - 2) / 4;
            let (count, sum) = (d as usize, 2 * d as usize);
            vec![
                (Part::Minus { count, sum }, params(d - 1, half(d), half(d), half(d))),
                (
                    Part::Plus { count: count + 1, sum },
                    params(d, half(d), half(d - 1), half(d)),
                ),
            ]
        }
        _ => {
            let d = ni / 4 - 1;
            let (count, sum) = (d as usize + 1, 2 * d as usize + 1);
            vec![
                (Part::Minus { count, sum }, params(d, half(d), half(d), half(d + 1))),
                (Part::Plus { count, sum }, params(d, half(d + 1), half(d), half(d))),
            ]
        }
    }
}

/// The nine families of irreducible modules met in the even halves, for all
/// admissible `n ≤ max_n`, each tagged with its family and `n`.
pub fn half_family_list(max_n: usize) -> Vec<(String, RdParams)> {
    let mut out = Vec::new();
    let e = |k: i64| Q::frac(k, 8);
    for n in 0..=max_n as i64 {
        let mut push = |family: &str, p: RdParams| out.push((format!("{family}(n={n})"), p));
        if n % 2 == 1 {
            let q = Q::frac(-1, 4);
            push("odd", params((n - 1) / 2, q.clone(), q.clone(), q));
        }
        if n % 4 == 2 {
            let d = (n - 2) / 4;
            push("2a", params(d, e(n - 2), e(n - 2), e(n - 6)));
            push("2b", params(d, e(n - 2), e(n - 6), e(n - 2)));
            push("2c", params(d, e(n - 6), e(n - 2), e(n - 2)));
            if n >= 6 {
                push("2d", params((n - 6) / 4, e(n - 2), e(n - 2), e(n - 2)));
            }
        }
        if n % 4 == 0 {
            if n >= 4 {
                let d = n / 4 - 1;
                push("0a", params(d, e(n - 4), e(n - 4), e(n)));
                push("0b", params(d, e(n - 4), e(n), e(n - 4)));
                push("0c", params(d, e(n), e(n - 4), e(n - 4)));
            }
            push("0d", params(n / 4, e(n - 4), e(n - 4), e(n - 4)));
        }
    }
    out
}

/// The pairwise non-isomorphic irreducible `ℜ`-submodules of `ℂ^X`.
pub fn hypercube_classes(d: usize) -> Vec<RdParams> {
    let d = d as i64;
    let mut out = Vec::new();
    let mut family = |hi: i64, f: &dyn Fn(i64) -> (Q, Q, Q)| {
        for k in 0..=hi {
            let (a, b, c) = f(k);
            out.push(params(k, a, b, c));
        }
    };
    if d % 2 == 1 {
        family((d - 1) / 2, &|_| (Q::frac(-1, 4), Q::frac(-1, 4), Q::frac(-1, 4)));
        return out;
    }
    // (short, long) upper bounds for the two kinds of range
    let (short, long, top) = if d % 4 == 2 {
        ((d - 6) / 4, (d - 2) / 4, (d - 2) / 4)
    } else {
        (d / 4 - 1, d / 4 - 1, d / 4)
    };
    let extra = if d % 4 == 2 { short } else { d / 4 - 2 };
    family(short, &|k| (half(k), half(k + 1), half(k)));
    family(top, &|k| (half(k - 1), half(k - 1), half(k - 1)));
    family(long, &|k| (half(k - 1), half(k), half(k)));
    family(long, &|k| (half(k), half(k), half(k - 1)));
    family(extra, &|k| (half(k + 1), half(k + 1), half(k + 1)));
    family(long, &|k| (half(k), half(k - 1), half(k)));
    family(short, &|k| (half(k + 1), half(k), half(k)));
    family(short, &|k| (half(k), half(k), half(k + 1)));
    out
}

/// Matrix-block sizes of the hypercube operator algebra with multiplicities.
pub fn hypercube_block_profile(d: usize) -> BTreeMap<usize, usize> {
    let mut blocks = BTreeMap::new();
    let mut add = |k: usize, m: usize| {
        if k > 0 && m > 0 {
            *blocks.entry(k).or_insert(0) += m;
        }
    };
    if d % 2 == 1 {
        for k in 1..=d.div_ceil(2) {
            add(k, 1);
        }
    } else if d % 4 == 2 {
        add((d + 2) / 4, 4);
        for k in 1..=(d - 2) / 4 {
            add(k, 8);
        }
    } else {
        add(d / 4 + 1, 1);
        add(d / 4, 7);
        for k in 1..d / 4 {
            add(k, 8);
        }
    }
    blocks
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(⌊D/2⌋ + 3, 3) + C(⌈D/2⌉ + 1, 3)`.
pub fn hypercube_algebra_dim(d: usize) -> usize {
    binomial(d / 2 + 3, 3) + binomial(d.div_ceil(2) + 1, 3)
}

/// The `(n, parity)` even halves that occur in `ℂ^X`.
pub fn hypercube_even_halves(d: usize) -> Vec<(usize, u8)> {
    let mut out = Vec::new();
    for k in 0..=d / 2 {
        let n = d - 2 * k;
        out.push((n, 0));
        if n >= 1 {
            out.push((n, 1));
        }
    }
    out.sort();
    out
}

/// The `(n, parity)` even halves that occur in `ℂ^{X_e}`.
pub fn halved_cube_halves(d: usize) -> Vec<(usize, u8)> {
    let mut out: Vec<(usize, u8)> = (0..=d / 2)
        .filter(|k| k % 2 == 0)
        .map(|k| (d - 2 * k, 0))
        .chain((1..=(d.max(1) - 1) / 2).filter(|k| k % 2 == 1).map(|k| (d - 2 * k, 1)))
        .collect();
    out.sort();
    out
}

/// Dimension of an even half.
pub fn half_dim(n: usize, parity: u8) -> usize {
    (n - usize::from(parity)) / 2 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;

    #[test]
    fn algebra_dims() {
        let got: Vec<usize> = (2..=8).map(hypercube_algebra_dim).collect();
        assert_eq!(got, vec![4, 5, 11, 14, 24, 30, 45]);
    }

    #[test]
    fn profile_sums_match_binomials() {
        for d in 2..=16 {
            let total: usize = hypercube_block_profile(d).iter().map(|(k, m)| k * k * m).sum();
            assert_eq!(total, hypercube_algebra_dim(d), "D={d}");
        }
    }

    #[test]
    fn class_lists_match_profiles() {
        for d in 2..=16 {
            let mut sizes = BTreeMap::new();
            for p in hypercube_classes(d) {
                *sizes.entry(p.d + 1).or_insert(0) += 1;
            }
            assert_eq!(sizes, hypercube_block_profile(d), "D={d}");
        }
    }

    #[test]
    fn d2_classes() {
        let got: Vec<String> = hypercube_classes(2).iter().map(ToString::to_string).collect();
        assert_eq!(got.len(), 4);
        for want in [
            "R_0(-1/2, -1/2, -1/2)",
            "R_0(-1/2, 0, 0)",
            "R_0(0, 0, -1/2)",
            "R_0(0, -1/2, 0)",
        ] {
            assert!(got.iter().any(|g| g == want), "{want} missing from {got:?}");
        }
    }

    #[test]
    fn half_tables_cover_dimensions() {
        for n in 0..=20 {
            for parity in 0..=u8::from(n > 0) {
                let m = half_dim(n, parity);
                let total: usize = half_table(n, parity).iter().map(|(_, p)| p.d + 1).sum();
                assert_eq!(total, m, "n={n} parity={parity}");
                for (part, p) in half_table(n, parity) {
                    assert_eq!(part.vectors(m).len(), p.d + 1);
                }
            }
        }
    }

    #[test]
    fn l4_zero_half() {
        let t = half_table(4, 0);
        assert_eq!(t[0].1, RdParams::new(Q::ZERO, q(1, 2), Q::ZERO, 0));
        assert_eq!(t[1].1, RdParams::new(Q::ZERO, Q::ZERO, Q::ZERO, 1));
        assert_eq!(half_table(2, 1)[0].1, RdParams::new(Q::ZERO, q(-1, 2), Q::ZERO, 0));
    }

    #[test]
    fn halved_cube_half_lists() {
        assert_eq!(halved_cube_halves(4), vec![(0, 0), (2, 1), (4, 0)]);
        assert_eq!(halved_cube_halves(3), vec![(1, 1), (3, 0)]);
        assert_eq!(hypercube_even_halves(2), vec![(0, 0), (2, 0), (2, 1)]);
    }
}
