use num_complex::Complex64;
use num_rational::BigRational;

use weyl_clifford::algebra::{
    lame_check, phases_equal_mod_one, weak_from_group_phases, AlgebraElement, AlgebraSignature,
};
use weyl_clifford::commforms::{
    canonical_form, clifford_form, matrix_lprime, transform_form, RationalMatrix, TransformMatrix,
};
use weyl_clifford::cyclotomic::CyclotomicField;
use weyl_clifford::matrep::{
    extract_tau_site, reducible_pair, standardize_weyl_pair, t_generators, tau_site, RepError,
    TripleVariant,
};
use weyl_clifford::qbinom::{commuting_factorization_check, deformed_binomial_theorem_check, r_poly};
use weyl_clifford::random::{cyclotomic, element, nonzero_rational, seeded};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn associativity_grid() {
    for n in 1..=4 {
        for l in 2..=6 {
            let sig = AlgebraSignature::strict(n, l).unwrap();
            let mut rng = seeded((n * 100 + l) as u64);
            for _ in 0..200 {
                let x = element(&mut rng, &sig, 3);
                let y = element(&mut rng, &sig, 3);
                let z = element(&mut rng, &sig, 3);
                let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
                let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
                assert_eq!(left, right, "n={n} l={l}");
            }
        }
    }
}

#[test]
fn twisted_roots_and_the_lame_identity() {
    for l in 2..=8usize {
        let base = AlgebraSignature::strict(3, l).unwrap();
        let mut rng = seeded(l as u64);
        for j in 1..l {
            let sig = base.with_zeta_power(j as i64).unwrap();
            if gcd(j, l) == 1 {
                for _ in 0..5 {
                    let coeffs: Vec<_> = (0..3).map(|_| cyclotomic(&mut rng, sig.field())).collect();
                    assert!(lame_check(&sig, &coeffs).unwrap().holds, "l={l} j={j}");
                }
            } else {
                let found = (0..20).any(|_| {
                    let coeffs: Vec<_> = (0..3).map(|_| cyclotomic(&mut rng, sig.field())).collect();
                    !lame_check(&sig, &coeffs).unwrap().holds
                });
                assert!(found, "no counterexample for l={l} j={j}");
            }
        }
    }
}

#[test]
fn weak_powers_are_central() {
    for n in 1..=4 {
        for l in 2..=5 {
            let sig = AlgebraSignature::weak(n, l).unwrap();
            for k in 1..=n {
                let p = AlgebraElement::generator(&sig, k).unwrap().power(l as u64);
                assert!(p.is_central());
                let mut exps = vec![0; n];
                exps[k - 1] = l as u32;
                assert_eq!(p.coefficient(&exps), Some(&sig.field().one()));
            }
        }
    }
}

#[test]
fn weak_generators_from_unequal_steps() {
    let mut rng = seeded(21);
    for n in [2, 4, 6] {
        for l in 2..=6 {
            for m_prime in 1..l as i64 {
                let ones = vec![BigRational::from_integer(1.into()); n / 2];
                let steps: Vec<_> = (0..n / 2).map(|_| nonzero_rational(&mut rng)).collect();
                let equal = weak_from_group_phases(n, l, &ones, m_prime).unwrap();
                let general = weak_from_group_phases(n, l, &steps, m_prime).unwrap();
                assert!(phases_equal_mod_one(&equal.phase_table, &general.phase_table));
                assert!(phases_equal_mod_one(&general.phase_table, &general.expected_table()));
            }
        }
    }
    // n = 2 is a single Weyl pair with phase 1/l.
    let w = weak_from_group_phases(2, 5, &[BigRational::new(3.into(), 2.into())], 1).unwrap();
    assert_eq!(w.phase_table.matrix().get(0, 1), &BigRational::new(1.into(), 5.into()));
}

#[test]
fn tau_sites_are_recovered_from_generators() {
    for l in 2..=4 {
        for sites in 1..=3 {
            let gens = t_generators(2 * sites, l, TripleVariant::Tau).unwrap();
            for k in 1..=sites {
                for i in 1..=3 {
                    let got = extract_tau_site(&gens, i, k).unwrap();
                    let want = tau_site(l, sites, i, k).unwrap();
                    assert!(got.distance(&want) < 1e-10, "l={l} sites={sites} i={i} k={k}");
                }
            }
        }
    }
    let gens = t_generators(4, 3, TripleVariant::Tau).unwrap();
    assert!(extract_tau_site(&gens, 4, 1).is_err());
    assert!(extract_tau_site(&gens, 1, 3).is_err());
}

#[test]
fn lprime_sign_flips_break_transport() {
    let lp = matrix_lprime(6).unwrap();
    let hc = canonical_form(6).unwrap();
    let hpm = clifford_form(6);
    let minus_one = BigRational::from_integer((-1).into());
    let mut flips = 0;
    for i in 0..6 {
        for j in 0..6 {
            if lp.matrix().get(i, j) == &minus_one {
                let mut m: RationalMatrix = lp.matrix().clone();
                m.set(i, j, BigRational::from_integer(1.into()));
                let t = transform_form(&TransformMatrix::new(m), &hc).unwrap();
                assert_ne!(t, hpm, "flip at ({i}, {j}) still transports");
                flips += 1;
            }
        }
    }
    assert_eq!(flips, 6);
}

#[test]
fn r_values_at_primitive_roots() {
    for l in 2..=10 {
        let zeta = CyclotomicField::new(l).root_of_unity(1);
        for k in 0..=l {
            let r = r_poly(k, l, &zeta).unwrap();
            let expected = match k {
                0 => -CyclotomicField::new(l).one(),
                k if k == l => CyclotomicField::new(l).one(),
                _ => CyclotomicField::new(l).zero(),
            };
            assert_eq!(r, expected, "l={l} k={k}");
        }
    }
}

#[test]
fn binomial_theorem_and_factorization() {
    for l in 1..=6 {
        for order in 1..=7 {
            assert!(deformed_binomial_theorem_check(l, order, 3, 5).unwrap().holds(), "l={l} order={order}");
        }
    }
    for l in 2..=9 {
        for order in 1..=9 {
            let primitive = order == l;
            assert_eq!(commuting_factorization_check(l, order).unwrap(), primitive || (l == 1), "l={l} order={order}");
        }
    }
}

#[test]
fn standardizer_rejects_reducible_pairs() {
    for (d, m) in [(4, 2), (6, 3), (6, 2), (8, 4)] {
        let p = reducible_pair(d, m).unwrap();
        // (U^m, V) obeys the Weyl relation for the order d/m root ζ^m.
        let err = standardize_weyl_pair(&p.u, &p.v, d / m).unwrap_err();
        assert!(matches!(err, RepError::DegenerateSpectrum { multiplicity } if multiplicity == m), "{err}");
    }
}

#[test]
fn numeric_lame_on_rescaled_generators() {
    // c_k t_k satisfy the weak relations; (Σ x_k c_k t_k)^l = Σ x_k^l c_k^l.
    let mut rng = seeded(31);
    for count in 1..=5 {
        for l in 2..=4 {
            let gens = t_generators(count, l, TripleVariant::Taw).unwrap();
            let d = gens.dim();
            let cs: Vec<Complex64> = (0..count).map(|k| Complex64::from_polar(1.0 + 0.3 * k as f64, 0.7 * k as f64)).collect();
            let xs: Vec<Complex64> = (0..count).map(|_| weyl_clifford::random::complex(&mut rng)).collect();
            let mut sum = weyl_clifford::matrep::ComplexMatrix::zeros(d);
            let mut scalar = Complex64::new(0.0, 0.0);
            for ((t, c), x) in gens.matrices().iter().zip(&cs).zip(&xs) {
                sum = &sum + &t.scale(c * x);
                scalar += (c * x).powu(l as u32);
            }
            let lhs = sum.pow(l as u64);
            let rhs = weyl_clifford::matrep::ComplexMatrix::identity(d).scale(scalar);
            assert!(lhs.distance(&rhs) <= 1e-9 * rhs.frobenius_norm().max(1.0), "count={count} l={l}");
        }
    }
}
