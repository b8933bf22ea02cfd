use klein_core::exact::{GaussianRational, Matrix, MultiPoly, Var, VariableContext};
use num_rational::Ratio;
use proptest::prelude::*;

type Q = GaussianRational;

fn gq() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=12, -30i64..=30, 1i64..=12)
        .prop_map(|(a, b, c, d)| &Q::from_fraction(a, b) + &(&Q::from_fraction(c, d) * &Q::i()))
}

fn nonzero_gq() -> impl Strategy<Value = Q> {
    gq().prop_filter("nonzero", |q| !q.is_zero())
}

/// Small random polynomials in {a,b,c,d} with integer coefficients.
fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, 0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2), 0..6).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(VariableContext::ABCD), |acc, (c, e0, e1, e2, e3)| {
            let src = format!("{c}*a^{e0}*b^{e1}*c^{e2}*d^{e3}");
            acc.add(&MultiPoly::parse(VariableContext::ABCD, &src).expect("valid term"))
        })
    })
}

fn point4() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(gq(), 4)
}

/// Complex division with 128-bit rationals, independent of the crate.
fn oracle_div(x: (Ratio<i128>, Ratio<i128>), y: (Ratio<i128>, Ratio<i128>)) -> (Ratio<i128>, Ratio<i128>) {
    let n = y.0 * y.0 + y.1 * y.1;
    ((x.0 * y.0 + x.1 * y.1) / n, (x.1 * y.0 - x.0 * y.1) / n)
}

/// Row echelon rank over Q with 128-bit rationals.
fn oracle_rank(mut m: Vec<Vec<Ratio<i128>>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != Ratio::from_integer(0)) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let f = m[r][c] / m[rank][c];
            let pivot = m[rank].clone();
            for (x, v) in m[r].iter_mut().zip(pivot).skip(c) {
                *x -= f * v;
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn division_matches_hand_value() {
    let q = Q::from_fraction(3, 2).checked_div(&Q::from_ints(0, 2)).unwrap();
    assert_eq!(q, Q::from_fraction(-3, 4) * Q::i());
    assert_eq!(q.to_string().parse::<Q>().unwrap(), q);
}

proptest! {
    #[test]
    fn field_axioms(a in gq(), b in gq(), c in gq()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Q::zero());
        prop_assert_eq!(&a * &Q::one(), a.clone());
    }

    #[test]
    fn inverses(a in nonzero_gq()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), Q::one());
        prop_assert!(Q::zero().inv().is_err());
    }

    #[test]
    fn division_matches_oracle(a in -30i64..=30, b in 1i64..=12, c in -30i64..=30, d in 1i64..=12,
                               e in -30i64..=30, f in 1i64..=12, g in -30i64..=30, h in 1i64..=12) {
        prop_assume!(e != 0 || g != 0);
        let x = &Q::from_fraction(a, b) + &(&Q::from_fraction(c, d) * &Q::i());
        let y = &Q::from_fraction(e, f) + &(&Q::from_fraction(g, h) * &Q::i());
        let r = |n: i64, m: i64| Ratio::new(n as i128, m as i128);
        let (re, im) = oracle_div((r(a, b), r(c, d)), (r(e, f), r(g, h)));
        let expected = &Q::from_fraction(*re.numer() as i64, *re.denom() as i64)
            + &(&Q::from_fraction(*im.numer() as i64, *im.denom() as i64) * &Q::i());
        prop_assert_eq!(x.checked_div(&y).unwrap(), expected);
    }

    #[test]
    fn text_round_trip(a in gq()) {
        prop_assert_eq!(a.to_string().parse::<Q>().unwrap(), a);
    }

    #[test]
    fn polynomial_ring_laws(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        if !g.is_zero() {
            prop_assert_eq!(f.mul(&g).div_exact(&g).unwrap(), Some(f.clone()));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(), g in poly(), p in point4()) {
        let ev = |q: &MultiPoly| q.evaluate(&p).unwrap();
        prop_assert_eq!(ev(&f.mul(&g)), &ev(&f) * &ev(&g));
        prop_assert_eq!(ev(&f.add(&g)), &ev(&f) + &ev(&g));
    }

    #[test]
    fn partials_commute_and_obey_leibniz(f in poly(), g in poly()) {
        let d = |q: &MultiPoly, v: Var| q.partial(v, 1).unwrap();
        prop_assert_eq!(d(&d(&f, Var::A), Var::B), d(&d(&f, Var::B), Var::A));
        prop_assert_eq!(d(&f.mul(&g), Var::C), d(&f, Var::C).mul(&g).add(&f.mul(&d(&g, Var::C))));
    }

    #[test]
    fn rank_and_kernel(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
        let m = Matrix::from_rows(5, rows.iter().map(|r| r.iter().map(|&x| Q::from(x)).collect()).collect()).unwrap();
        let rk = m.rank_kernel();
        prop_assert_eq!(rk.rank + rk.kernel.len(), 5);
        prop_assert_eq!(rk.rank, m.transpose().rank());
        for v in &rk.kernel {
            prop_assert!(m.mul_vec(v).iter().all(Q::is_zero));
        }
        let oracle = rows.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x as i128)).collect()).collect();
        prop_assert_eq!(rk.rank, oracle_rank(oracle));
    }

    #[test]
    fn specialization_never_raises_rank(
        entries in prop::collection::vec(poly(), 12),
        p in point4(),
    ) {
        let m = Matrix::from_rows(4, entries.chunks(4).map(<[MultiPoly]>::to_vec).collect()).unwrap();
        let symbolic = m.rank().unwrap();
        prop_assert!(m.specialize(&p).unwrap().rank() <= symbolic);
    }
}
