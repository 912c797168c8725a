use std::f64::consts::{PI, TAU};

use rand::Rng;

use dna_core::harness::instance_rng;
use dna_core::hyperbolic::{
    counterexample, hyp_angle, hyp_distance, hyp_full_rotation, hyp_mean_curvature, HypPoint,
    HypPolyline, MAX_SCALE,
};

fn random_point<R: Rng>(rng: &mut R, radius: f64) -> HypPoint {
    HypPoint::from_polar(rng.gen_range(0.0..radius), rng.gen_range(0.0..TAU))
}

fn minkowski(u: [f64; 3], v: [f64; 3]) -> f64 {
    -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cosine_rule(a: f64, b: f64, c: f64) -> f64 {
    ((b.cosh() * c.cosh() - a.cosh()) / (b.sinh() * c.sinh()))
        .clamp(-1.0, 1.0)
        .acos()
}

/// Area from the three sides.
fn lhuilier(a: f64, b: f64, c: f64) -> f64 {
    let s = (a + b + c) / 2.0;
    let t = |x: f64| (x / 2.0).tanh();
    4.0 * (t(s) * t(s - a) * t(s - b) * t(s - c)).sqrt().atan()
}

fn triangle(i: u64) -> Option<[HypPoint; 3]> {
    let mut rng = instance_rng(11, i);
    let v = [0; 3].map(|_| random_point(&mut rng, 3.0));
    let d = [
        hyp_distance(&v[0], &v[1]),
        hyp_distance(&v[1], &v[2]),
        hyp_distance(&v[2], &v[0]),
    ];
    (d.iter().all(|&x| x > 0.05)).then_some(v)
}

#[test]
fn distance_matches_inner_product_form() {
    for i in 0..5_000 {
        let mut rng = instance_rng(10, i);
        let (u, v) = (random_point(&mut rng, 4.0), random_point(&mut rng, 4.0));
        let d = (-minkowski(u.coords(), v.coords())).max(1.0).acosh();
        let got = hyp_distance(&u, &v);
        assert!((got - d).abs() < 1e-6 * (1.0 + d), "{got} vs {d}");
        assert!((hyp_distance(&v, &u) - got).abs() < 1e-12);
    }
}

#[test]
fn angles_match_cosine_rule() {
    let mut checked = 0;
    for i in 0..5_000 {
        let Some([a, b, c]) = triangle(i) else {
            continue;
        };
        let (x, y, z) = (
            hyp_distance(&b, &c),
            hyp_distance(&c, &a),
            hyp_distance(&a, &b),
        );
        let alpha = hyp_angle(&b, &a, &c).unwrap();
        assert!((alpha - cosine_rule(x, y, z)).abs() < 1e-6, "instance {i}");
        checked += 1;
    }
    assert!(checked > 4_000);
}

#[test]
fn gauss_bonnet_against_side_formula() {
    for i in 0..5_000 {
        let Some([a, b, c]) = triangle(i) else {
            continue;
        };
        let p = HypPolyline::new(vec![a, b, c]).unwrap();
        let area = lhuilier(
            hyp_distance(&b, &c),
            hyp_distance(&c, &a),
            hyp_distance(&a, &b),
        );
        let v = hyp_full_rotation(&p).unwrap();
        assert!(
            (v - (TAU + area)).abs() < 1e-6,
            "instance {i}: {v} vs {}",
            TAU + area
        );
    }
}

#[test]
fn angle_is_invariant_under_rotation_about_the_origin() {
    let rot = |p: &HypPoint, t: f64| {
        let [x0, x1, x2] = p.coords();
        HypPoint::new(x0, x1 * t.cos() - x2 * t.sin(), x1 * t.sin() + x2 * t.cos()).unwrap()
    };
    for i in 0..500 {
        let Some([a, b, c]) = triangle(i) else {
            continue;
        };
        let before = hyp_angle(&a, &b, &c).unwrap();
        let after = hyp_angle(&rot(&a, 1.1), &rot(&b, 1.1), &rot(&c, 1.1)).unwrap();
        assert!((before - after).abs() < 1e-9);
    }
}

#[test]
fn polar_points_lie_on_the_sheet() {
    for r in [0.0, 0.5, 3.0, MAX_SCALE] {
        let p = HypPoint::from_polar(r, 0.7);
        assert!((hyp_distance(&HypPoint::origin(), &p) - r).abs() < 1e-9 * (1.0 + r));
        let [x0, x1, x2] = p.coords();
        assert!(HypPoint::new(x0, x1, x2).is_ok());
    }
    assert!(HypPoint::new(1.0, 1.0, 0.0).is_err());
}

#[test]
fn counterexample_sweep() {
    let sweep: Vec<_> = (1..=100)
        .map(|k| counterexample(0.1 * k as f64).unwrap())
        .collect();
    for c in &sweep {
        assert!(
            c.ratio_l > 1.8 && c.ratio_l < 2.0,
            "t = {}: {}",
            c.t,
            c.ratio_l
        );
        assert!(c.ratio_v > 1.0);
        assert!((c.margin - (c.t_gamma - c.t_gamma1)).abs() < 1e-15);
    }
    // one sign change: DNA holds for small t and fails for large t
    let changes = sweep
        .windows(2)
        .filter(|w| (w[0].margin > 0.0) != (w[1].margin > 0.0))
        .count();
    assert_eq!(changes, 1);
    assert!(sweep[0].margin > 0.0 && sweep[99].margin < -0.01);
}

#[test]
fn small_scale_approaches_the_euclidean_figure() {
    // Euclidean limit: equilateral triangle with legs t, Γ adds the midsegment
    // trapezoid; V(Γ1) = 2π and L(Γ1) = 3t
    let c = counterexample(1e-3).unwrap();
    assert!((c.ratio_l - 5.5 / 3.0).abs() < 1e-5);
    let gamma1 = HypPolyline::new(vec![
        HypPoint::origin(),
        HypPoint::from_polar(1e-3, 0.0),
        HypPoint::from_polar(1e-3, PI / 3.0),
    ])
    .unwrap();
    assert!((hyp_mean_curvature(&gamma1).unwrap() * 3e-3 - TAU).abs() < 1e-5);
}

#[test]
fn rejects_scales_outside_the_domain() {
    assert!(counterexample(-1.0).is_err());
    assert!(counterexample(f64::NAN).is_err());
    assert!(counterexample(MAX_SCALE + 0.5).is_err());
    assert!(counterexample(MAX_SCALE).is_ok());
}

mod hyperbolic {
    use dna_core::hyperbolic::*;
    use std::f64::consts::{PI, TAU};

    fn law_of_cosines(a: f64, b: f64, c: f64) -> f64 {
        ((b.cosh() * c.cosh() - a.cosh()) / (b.sinh() * c.sinh())).acos()
    }

    #[test]
    fn distance_and_norm() {
        let p = HypPoint::from_polar(2.0, 0.7);
        assert_eq!(hyp_distance(&p, &p), 0.0);
        assert!((hyp_distance(&HypPoint::origin(), &p) - 2.0).abs() < 1e-12);
        assert!(p.norm_defect().abs() < 1e-12);
        assert!(HypPoint::new(1.0, 1.0, 0.0).is_err());
        assert!(HypPoint::new(-1.0, 0.0, 0.0).is_err());
        let q: HypPoint = serde_json::from_str("[1, 0, 0]").unwrap();
        assert_eq!(q, HypPoint::origin());
    }

    #[test]
    fn unit_equilateral_angle() {
        // circumradius R of the equilateral triangle with side 1
        let r = ((0.5f64).sinh() / (PI / 3.0).sin()).asinh();
        let v: Vec<HypPoint> = (0..3)
            .map(|k| HypPoint::from_polar(r, k as f64 * TAU / 3.0))
            .collect();
        assert!((hyp_distance(&v[0], &v[1]) - 1.0).abs() < 1e-12);
        let angles: Vec<f64> = (0..3)
            .map(|i| hyp_angle(&v[(i + 2) % 3], &v[i], &v[(i + 1) % 3]).unwrap())
            .collect();
        assert!((angles[0] - 0.918798).abs() < 1e-6);
        assert!((angles[0] - law_of_cosines(1.0, 1.0, 1.0)).abs() < 1e-12);
        assert!((angles[0] - angles[1]).abs() < 1e-12 && (angles[1] - angles[2]).abs() < 1e-12);
    }

    #[test]
    fn rotation_of_circuits_and_spikes() {
        let v = vec![
            HypPoint::origin(),
            HypPoint::from_polar(1.0, 0.0),
            HypPoint::from_polar(1.5, 1.0),
        ];
        let tri = HypPolyline::new(v.clone()).unwrap();
        let n = v.len();
        let angles: f64 = (0..n)
            .map(|i| hyp_angle(&v[(i + n - 1) % n], &v[i], &v[(i + 1) % n]).unwrap())
            .sum();
        let area = PI - angles;
        assert!(area > 0.0);
        let rot = hyp_full_rotation(&tri).unwrap();
        assert!((rot - (TAU + area)).abs() < 1e-12);
        let twice = HypPolyline::new(v.repeat(2)).unwrap();
        assert!((hyp_full_rotation(&twice).unwrap() - 2.0 * rot).abs() < 1e-12);
        let spike = HypPolyline::new(vec![v[0], v[1], v[0], v[2]]).unwrap();
        let a = hyp_angle(&v[0], &v[1], &v[0]).unwrap();
        assert_eq!(a, 0.0);
        assert!(hyp_full_rotation(&spike).unwrap() > PI);
    }

    #[test]
    fn counterexample_regimes() {
        assert!(counterexample(1.5).unwrap().margin > 0.0);
        let far = counterexample(7.0).unwrap();
        assert!(far.margin < -0.01);
        // reference margins from 50-digit arithmetic
        for (t, m, tol) in [
            (1.5, 0.08746005922914012, 1e-12),
            (7.0, -0.028001579119583, 1e-9),
            (10.0, -0.023035252404406507, 1e-5),
        ] {
            assert!(
                (counterexample(t).unwrap().margin - m).abs() < tol,
                "t = {t}"
            );
        }
        assert!(counterexample(0.0).is_err());
        assert!(counterexample(MAX_SCALE + 1.0).is_err());
    }
}
