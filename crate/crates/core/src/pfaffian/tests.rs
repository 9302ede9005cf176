use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::curves::SingularityType;
use crate::error::Error;
use crate::parse::parse_poly;
use crate::rational;

fn p(s: &str) -> Poly {
    parse_poly(s, &ambient_ring()).unwrap()
}

fn zero_tom() -> TomCoefficients {
    let z = ambient_ring().zero();
    TomCoefficients { a_prime: z.clone(), c_prime: z.clone(), d: z.clone(), e: z, f: rational::int(1) }
}

#[test]
fn skeleton_pfaffians() {
    let f = build_tom_family(&zero_tom()).unwrap();
    let pf = max_pfaffians(&f.matrix).unwrap();
    let want = ["xi*z - nu*y", "y^2*xi - nu*x + z^2", "zeta*x - y*xi^2 - z*nu", "nu*xi - zeta*y", "zeta*z - nu^2"];
    for (got, w) in pf.iter().zip(want) {
        assert_eq!(got, &p(w), "{w}");
    }
    let degs: Vec<u32> = pf.iter().map(|q| q.weighted_degree().unwrap().degree).collect();
    assert_eq!(degs, vec![4, 4, 5, 5, 6]);
}

#[test]
fn formats_of_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let ideal = ["x", "y", "z", "nu"];
    let tom = random_family(FamilyKind::Tom, &mut rng).unwrap();
    let jerry = random_family(FamilyKind::Jerry, &mut rng).unwrap();
    let tj = random_family(FamilyKind::TomJerry, &mut rng).unwrap();
    assert!(tom_check(&tom.matrix, &ideal, 2).unwrap());
    assert!(!jerry_check(&tom.matrix, &ideal, 3, 4).unwrap());
    assert!(jerry_check(&jerry.matrix, &ideal, 3, 4).unwrap());
    assert!(!tom_check(&jerry.matrix, &ideal, 2).unwrap());
    assert!(tom_check(&tj.matrix, &ideal, 2).unwrap());
    assert!(jerry_check(&tj.matrix, &ideal, 3, 4).unwrap());
}

#[test]
fn unprojection_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for kind in FamilyKind::ALL {
        let f = random_family(kind, &mut rng).unwrap();
        for (g, d) in f.unprojection.iter().zip([6, 6, 7, 8]) {
            assert!(g.is_homogeneous_of(d), "{kind}: {g}");
        }
    }
}

#[test]
fn curve_types() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (kind, t) in [(FamilyKind::Tom, vec![1, 3]), (FamilyKind::Jerry, vec![4, 0]), (FamilyKind::TomJerry, vec![3, 2])] {
        let f = random_family(kind, &mut rng).unwrap();
        let c = family_curve(&f).unwrap();
        assert_eq!(c.classification.singularity_type(), Some(&SingularityType(t)), "{kind}: {}", c.gamma);
    }
}

#[test]
fn bad_coefficients() {
    let mut c = zero_tom();
    c.e = p("x");
    assert!(matches!(build_tom_family(&c), Err(Error::Coefficient { name, .. }) if name == "e"));
    let mut c = zero_tom();
    c.a_prime = p("u^2");
    assert!(matches!(build_tom_family(&c), Err(Error::Coefficient { name, .. }) if name == "a'"));
    let mut c = zero_tom();
    c.f = rational::int(0);
    assert!(build_tom_family(&c).is_err());
}

#[test]
fn consistency_holds_for_random_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for kind in FamilyKind::ALL {
        let f = random_family(kind, &mut rng).unwrap();
        let report = family_consistency(&f).unwrap();
        assert!(report.passed(), "{kind}");
    }
}

#[test]
fn tampered_equation_fails() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut f = random_family(FamilyKind::Tom, &mut rng).unwrap();
    f.unprojection[0] = &f.unprojection[0] + &p("xi^3");
    let report = family_consistency(&f).unwrap();
    assert!(!report.passed());
    assert!(report.pairs.iter().filter(|c| c.v1 == "x").all(|c| !c.verified()));
}

#[test]
fn pf4_examples() {
    let r = ambient_ring();
    let (one, z) = (r.one(), r.zero());
    assert_eq!(pf4(&one, &z, &z, &z, &z, &one), one);
    assert!(pf4(&z, &z, &z, &z, &z, &z).is_zero());
}

#[test]
fn rank_two_matrix_has_zero_pfaffians() {
    // u v^T - v u^T
    let r = ambient_ring();
    let (u, v) = ([1, 2, 0, -1, 3], [0, 1, 4, 2, -2]);
    let upper: [Poly; 10] = std::array::from_fn(|k| {
        let (i, j) = POSITIONS[k];
        r.constant(rational::int(u[i - 1] * v[j - 1] - v[i - 1] * u[j - 1]))
    });
    let m = SkewMatrix5::new(upper).unwrap();
    assert!(max_pfaffians(&m).unwrap().iter().all(Poly::is_zero));
}

#[test]
fn multiple_of_first_pfaffian() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = random_family(FamilyKind::Tom, &mut rng).unwrap();
    let pf = max_pfaffians(&f.matrix).unwrap();
    let cert = ideal_membership_bounded(&(&p("x") * &pf[0]), &pf).unwrap().unwrap();
    assert!(cert.verify(&pf));
    assert!(ideal_membership_bounded(&p("xi^2"), &[p("x"), p("y"), p("z"), p("nu")]).unwrap().is_none());
}

#[test]
fn pfaffians_in_projection_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for kind in FamilyKind::ALL {
        let f = random_family(kind, &mut rng).unwrap();
        for q in max_pfaffians(&f.matrix).unwrap() {
            assert!(monomial_ideal_contains(&q, &["x", "y", "z", "nu"]).unwrap());
        }
    }
}

#[test]
fn injected_violation_breaks_tom_format() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut f = random_family(FamilyKind::Tom, &mut rng).unwrap();
    f.matrix.set_entry(1, 5, p("xi")).unwrap();
    assert!(!tom_check(&f.matrix, &["x", "y", "z", "nu"], 2).unwrap());
}
