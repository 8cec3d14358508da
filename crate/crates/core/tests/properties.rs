use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use weyl_clifford::algebra::{AlgebraElement, AlgebraSignature, Mode};
use weyl_clifford::commforms::{
    canonical_form, clifford_form, conjugate_to_n, is_symplectic, transform_form, CommutatorForm,
    RationalMatrix, TransformMatrix,
};
use weyl_clifford::cyclotomic::{CyclotomicField, CyclotomicNumber};
use weyl_clifford::matrep::{
    conjugate_generators, standardize_weyl_pair, t_generators, verify_relations_with, weyl_pair,
    ComplexMatrix, GeneratorSet, TripleVariant,
};
use weyl_clifford::qbinom::{binomial, q_binomial, q_binomial_via_r};
use weyl_clifford::random::{cyclotomic, element, seeded, symplectic, unitary};

fn field_and_values(count: usize) -> impl Strategy<Value = (CyclotomicField, Vec<CyclotomicNumber>)> {
    (1usize..=12, any::<u64>()).prop_map(move |(m, seed)| {
        let f = CyclotomicField::new(m);
        let mut rng = seeded(seed);
        let xs = (0..count).map(|_| cyclotomic(&mut rng, &f)).collect();
        (f, xs)
    })
}

fn signature() -> impl Strategy<Value = AlgebraSignature> {
    (1usize..=4, 2usize..=6, prop::bool::ANY).prop_map(|(n, l, weak)| {
        let mode = if weak { Mode::Weak } else { Mode::Strict };
        AlgebraSignature::new(n, l, mode).unwrap()
    })
}

fn elements(count: usize) -> impl Strategy<Value = (AlgebraSignature, Vec<AlgebraElement>)> {
    (signature(), any::<u64>()).prop_map(move |(sig, seed)| {
        let mut rng = seeded(seed);
        let xs = (0..count).map(|_| element(&mut rng, &sig, 4)).collect();
        (sig, xs)
    })
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=6).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_ring_axioms((_f, xs) in field_and_values(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert!((a - a).is_zero());
    }

    #[test]
    fn field_inverses_and_conjugation((f, xs) in field_and_values(2)) {
        let (a, b) = (&xs[0], &xs[1]);
        if !a.is_zero() {
            prop_assert!((a * &a.inverse().unwrap()).is_one());
        }
        prop_assert_eq!((a * b).conjugate(), &a.conjugate() * &b.conjugate());
        let z = (a * b).to_complex();
        let w = a.to_complex() * b.to_complex();
        prop_assert!((z - w).norm() <= 1e-9 * (1.0 + w.norm()));
        prop_assert!((a.conjugate().to_complex() - a.to_complex().conj()).norm() < 1e-9 * (1.0 + a.to_complex().norm()));
        prop_assert_eq!(f.root_of_unity(f.order() as i64), f.one());
    }

    #[test]
    fn cyclotomic_json_round_trip((_f, xs) in field_and_values(1)) {
        let s = serde_json::to_string(&xs[0]).unwrap();
        let back: CyclotomicNumber = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, xs[0].clone());
    }

    #[test]
    fn multiplication_is_associative((_sig, xs) in elements(3)) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let left = x.multiply(y).unwrap().multiply(z).unwrap();
        let right = x.multiply(&y.multiply(z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes((_sig, xs) in elements(3)) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let left = x.multiply(&y.add(z).unwrap()).unwrap();
        let right = x.multiply(y).unwrap().add(&x.multiply(z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn generator_relations(sig in signature()) {
        let n = sig.n();
        let ts: Vec<_> = (1..=n).map(|k| AlgebraElement::generator(&sig, k).unwrap()).collect();
        for j in 0..n {
            for k in j + 1..n {
                let lhs = ts[j].multiply(&ts[k]).unwrap();
                let rhs = ts[k].multiply(&ts[j]).unwrap().scale(&sig.zeta()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
            let p = ts[j].power(sig.l() as u64);
            match sig.mode() {
                Mode::Strict => prop_assert_eq!(p, AlgebraElement::identity(&sig)),
                Mode::Weak => prop_assert!(p.is_central() && p != AlgebraElement::identity(&sig)),
            }
        }
    }

    #[test]
    fn matrices_intertwine_products(n in 1usize..=4, l in 2usize..=5, seed in any::<u64>()) {
        let sig = AlgebraSignature::strict(n, l).unwrap();
        let rep = t_generators(n, l, TripleVariant::Taw).unwrap();
        let mut rng = seeded(seed);
        let x = element(&mut rng, &sig, 6);
        let y = element(&mut rng, &sig, 6);
        let mx = x.to_matrix(rep.matrices()).unwrap();
        let my = y.to_matrix(rep.matrices()).unwrap();
        let mxy = x.multiply(&y).unwrap().to_matrix(rep.matrices()).unwrap();
        let rel = mxy.distance(&(&mx * &my)) / (mx.frobenius_norm() * my.frobenius_norm()).max(1e-300);
        prop_assert!(rel <= 1e-10, "relative error {}", rel);
    }

    #[test]
    fn element_json_round_trip((_sig, xs) in elements(1)) {
        let s = serde_json::to_string(&xs[0]).unwrap();
        let back: AlgebraElement = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, xs[0].clone());
    }

    #[test]
    fn transported_forms_stay_antisymmetric(
        half in 1usize..=3,
        entries in prop::collection::vec(small_rational(), 36),
    ) {
        let n = 2 * half;
        let g = TransformMatrix::new(RationalMatrix::from_fn(n, |i, j| entries[i * 6 + j].clone()));
        for h in [canonical_form(n).unwrap(), clifford_form(n)] {
            let t = transform_form(&g, &h).unwrap();
            prop_assert!(t.matrix().is_antisymmetric());
        }
    }

    #[test]
    fn symplectic_maps_conjugate_to_form_preservers(half in 1usize..=4, seed in any::<u64>()) {
        let n = 2 * half;
        let mut rng = seeded(seed);
        let s1 = symplectic(&mut rng, n, 4);
        let s2 = symplectic(&mut rng, n, 4);
        prop_assert!(is_symplectic(&s1));
        let hpm = clifford_form(n);
        let n1 = conjugate_to_n(&s1).unwrap();
        let n2 = conjugate_to_n(&s2).unwrap();
        prop_assert_eq!(transform_form(&n1, &hpm).unwrap(), hpm.clone());
        let n12 = conjugate_to_n(&s1.compose(&s2).unwrap()).unwrap();
        prop_assert_eq!(n12, n1.compose(&n2).unwrap());
    }

    #[test]
    fn form_json_round_trip(half in 1usize..=4, seed in any::<u64>()) {
        let n = 2 * half;
        let s = symplectic(&mut seeded(seed), n, 3);
        let json = serde_json::to_string(s.matrix()).unwrap();
        let back: RationalMatrix = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, s.matrix());
        let h: CommutatorForm = transform_form(&s, &clifford_form(n)).unwrap();
        prop_assert!(h.matrix().is_antisymmetric());
    }

    #[test]
    fn gaussian_binomials(l in 1usize..=9, k_frac in 0.0f64..=1.0, order in 1usize..=10) {
        let k = ((l as f64) * k_frac).round() as usize;
        let lambda = CyclotomicField::new(order).root_of_unity(1);
        let v = q_binomial(l, k, &lambda).unwrap();
        prop_assert_eq!(&v, &q_binomial(l, l - k, &lambda).unwrap());
        prop_assert_eq!(&v, &q_binomial_via_r(l, k, &lambda).unwrap());
        if 0 < k && k < l {
            // [l k] = [l-1 k-1] + λ^k [l-1 k]
            let rhs = &q_binomial(l - 1, k - 1, &lambda).unwrap()
                + &(&lambda.pow(k as u64) * &q_binomial(l - 1, k, &lambda).unwrap());
            prop_assert_eq!(&v, &rhs);
        }
        let one = CyclotomicField::new(1).one();
        let at_one = q_binomial(l, k, &one).unwrap();
        prop_assert_eq!(at_one.as_rational().cloned(), Some(BigRational::from_integer(binomial(l, k))));
        prop_assert_eq!(binomial(l, k), BigInt::from(num_integer::binomial(l as u64, k as u64)));
    }

    #[test]
    fn conjugated_generators_keep_relations(count in 1usize..=4, l in 2usize..=4, seed in any::<u64>()) {
        let gens = t_generators(count, l, TripleVariant::Tau).unwrap();
        let q = unitary(&mut seeded(seed), gens.dim());
        let conj = conjugate_generators(&gens, &q).unwrap();
        prop_assert!(verify_relations_with(&conj, 1e-9).passed);
    }

    #[test]
    fn standardizer_inverts_conjugation(l in 2usize..=7, seed in any::<u64>()) {
        let (u, v) = weyl_pair(l).unwrap();
        let q = unitary(&mut seeded(seed), l);
        let pair = GeneratorSet::custom(l, vec![u.clone(), v.clone()]).unwrap();
        let conj = conjugate_generators(&pair, &q).unwrap();
        let (up, vp) = (&conj.matrices()[0], &conj.matrices()[1]);
        let s = standardize_weyl_pair(up, vp, l).unwrap();
        let m_inv = s.m.inverse().unwrap();
        prop_assert!((&(&m_inv * up) * &s.m).distance(&u) < 1e-8);
        prop_assert!((&(&m_inv * vp) * &s.m).distance(&v.scale(s.mu)) < 1e-8);
        // q⁻¹ u q = u' up to the standardizer's overall phase: m and q⁻¹ agree up to scale.
        let ratio = &s.m * &q;
        let c = ratio.get(0, 0);
        prop_assert!(ratio.distance(&ComplexMatrix::identity(l).scale(c)) < 1e-8);
    }
}
