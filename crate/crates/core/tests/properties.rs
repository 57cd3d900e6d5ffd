use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use schubert_core::combinatorics::{
    binomial, catalan, classify_partition, complement, compositions, PartitionParity,
};
use schubert_core::polynomial::{LinearFormProduct, ProductOrder, TorusPoint};
use schubert_core::schur::{
    duality_pairing, real_schur_coefficient, real_schur_polynomial, schur_coefficient,
    schur_polynomial,
};
use schubert_core::{Partition, RootPolynomial, SparsePoly};

fn poly_strategy(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -20i64..=20),
        0..=max_terms,
    )
    .prop_map(move |terms| SparsePoly::from_terms(nvars, terms).unwrap())
}

fn homogeneous_strategy(nvars: usize, degree: u32) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0..=degree, nvars - 1), -9i64..=9), 0..=6)
        .prop_map(move |terms| {
            let terms = terms.into_iter().filter_map(|(mut e, c)| {
                let used: u32 = e.iter().sum();
                (used <= degree).then(|| {
                    e.push(degree - used);
                    (e, c)
                })
            });
            SparsePoly::from_terms(nvars, terms.collect::<Vec<_>>()).unwrap()
        })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !cur.contains(&v) {
                cur.push(v);
                rec(cur, k, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), k, &mut out);
    out
}

fn symmetrize(f: &SparsePoly) -> SparsePoly {
    permutations(f.nvars())
        .iter()
        .fold(SparsePoly::zero(f.nvars()), |acc, p| &acc + &f.permute(p).unwrap())
}

fn partition_strategy(len: usize, max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly_strategy(3, 4, 6), g in poly_strategy(3, 4, 6), h in poly_strategy(3, 4, 6)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f - &f), &SparsePoly::zero(3));
        prop_assert_eq!(&f * &SparsePoly::one(3), f.clone());
    }

    #[test]
    fn division_round_trip(f in poly_strategy(3, 4, 6), g in poly_strategy(3, 3, 4)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn sqrt_round_trip(f in poly_strategy(2, 5, 6)) {
        let root = (&f * &f).exact_sqrt().unwrap();
        prop_assert!(root == f || root == -&f);
        if let Some((_, c)) = root.leading_term() {
            prop_assert!(*c > BigInt::from(0));
        }
    }

    #[test]
    fn canonical_text_round_trip(f in poly_strategy(3, 5, 8)) {
        let text = f.to_string();
        prop_assert_eq!(SparsePoly::parse(&text, 3).unwrap(), f);
    }

    #[test]
    fn schur_polynomials_are_symmetric(alpha in partition_strategy(3, 4)) {
        let s = schur_polynomial(&alpha).unwrap();
        for p in permutations(3) {
            prop_assert_eq!(&s.poly().permute(&p).unwrap(), s.poly());
        }
    }

    #[test]
    fn torus_evaluation_is_multiplicative(
        f in poly_strategy(2, 6, 5),
        g in poly_strategy(2, 6, 5),
        a in 0.0f64..7.0,
        b in 0.0f64..7.0,
    ) {
        let p = TorusPoint::new(vec![a, b]);
        let lhs = (&f * &g).eval_torus(&p).unwrap();
        let rhs = f.eval_torus(&p).unwrap() * g.eval_torus(&p).unwrap();
        let scale = 1.0 + lhs.norm().max(rhs.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-9 * scale);
    }

    #[test]
    fn product_orders_agree(forms in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 0..12)) {
        let p = LinearFormProduct::new(3, forms).unwrap();
        prop_assert_eq!(
            p.expand_with(ProductOrder::Balanced),
            p.expand_with(ProductOrder::Sequential)
        );
    }

    #[test]
    fn complement_is_an_involution(alpha in partition_strategy(4, 5), extra in 0u32..3) {
        let m = alpha.first() + extra;
        let c = complement(&alpha, m, 4).unwrap();
        prop_assert_eq!(complement(&c, m, 4).unwrap(), alpha);
    }

    #[test]
    fn classify_round_trip(beta in partition_strategy(3, 5)) {
        let even = beta.repeated().doubled();
        prop_assert_eq!(classify_partition(&even).unwrap(), PartitionParity::Even(beta.clone()));
        let odd = beta.repeated().doubled().shifted(1);
        prop_assert_eq!(classify_partition(&odd).unwrap(), PartitionParity::Odd(beta));
    }

    #[test]
    fn composition_count(d in 0u32..9, k in 1usize..5) {
        let n = compositions(d, k).len();
        prop_assert_eq!(BigInt::from(n), BigInt::from(binomial((d as u64) + k as u64 - 1, k as u64 - 1)));
    }

    #[test]
    fn basis_reconstruction(raw in homogeneous_strategy(3, 5)) {
        let f = symmetrize(&raw);
        let root = RootPolynomial::complex(f.clone()).unwrap();
        let mut rebuilt = SparsePoly::zero(3);
        for alpha in Partition::all_of_size(5, 3) {
            let c = schur_coefficient(&root, &alpha).unwrap().value;
            rebuilt = &rebuilt + &schur_polynomial(&alpha).unwrap().poly().scale(&c);
        }
        prop_assert_eq!(rebuilt, f);
    }

    #[test]
    fn real_basis_reconstruction(
        even in homogeneous_strategy(2, 4),
        odd in homogeneous_strategy(2, 3),
    ) {
        // p(x²) + x1 x2 q(x²) of degree 8, symmetric
        let x1x2 = SparsePoly::monomial(1, &[1, 1]);
        let f = symmetrize(&(&even.square_variables() + &(&x1x2 * &odd.square_variables())));
        let root = RootPolynomial::real(f.clone()).unwrap();
        let mut rebuilt = SparsePoly::zero(2);
        for profile in Partition::all_of_size(8, 2) {
            let parity = profile.parts()[0] % 2;
            if profile.parts().iter().any(|p| p % 2 != parity) {
                continue;
            }
            let alpha = profile.repeated();
            let c = real_schur_coefficient(&root, &alpha).unwrap().value;
            rebuilt = &rebuilt + &real_schur_polynomial(&alpha).unwrap().poly().scale(&c);
        }
        prop_assert_eq!(rebuilt, f);
    }
}

#[test]
fn orthonormality() {
    for k in 1..=4 {
        for size in 0..=8 {
            let parts = Partition::all_of_size(size, k);
            for beta in &parts {
                let s = schur_polynomial(beta).unwrap();
                for alpha in &parts {
                    let c = schur_coefficient(&s, alpha).unwrap().value;
                    let expected = BigInt::from(u8::from(alpha == beta));
                    assert_eq!(c, expected, "k={k} alpha={alpha} beta={beta}");
                }
            }
        }
    }
}

#[test]
fn duality_on_rectangles() {
    for k in 1..=4 {
        for m in 0..=3 {
            let box_parts = Partition::all_in_rectangle(k, m);
            for alpha in &box_parts {
                let dual = complement(alpha, m, k).unwrap();
                for beta in &box_parts {
                    let v = duality_pairing(alpha, beta, m).unwrap();
                    assert_eq!(v, BigInt::from(u8::from(*beta == dual)), "{alpha} {beta} m={m}");
                }
            }
        }
    }
}

#[test]
fn catalan_alternate_formula() {
    for n in 0..40u32 {
        let lhs = BigInt::from(catalan(n));
        let rhs = BigInt::from(binomial(2 * n as u64, n as u64))
            - BigInt::from(binomial(2 * n as u64, n as u64 + 1));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn quadrature_tracks_schur_coefficients() {
    let s = schur_polynomial(&Partition::new(vec![3, 1, 0]).unwrap()).unwrap();
    let f = RootPolynomial::complex(s.poly() * s.poly()).unwrap();
    for alpha in Partition::all_of_size(8, 3) {
        let exact = schur_coefficient(&f, &alpha).unwrap().value;
        let v = schubert_core::schur::numeric_schur_coefficient(&f, &alpha, 40).unwrap();
        let e: f64 = exact.to_string().parse().unwrap();
        assert!((v - Complex64::new(e, 0.0)).norm() < 1e-8, "{alpha}: {v} vs {exact}");
    }
}
