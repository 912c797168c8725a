use std::f64::consts::{FRAC_PI_2, PI, TAU};

use proptest::prelude::*;
use rand::Rng;

use dna_core::harness::{instance_rng, random_sph_polyline_with, random_sph_quad, sample_cap};
use dna_core::spherical::{
    f_xcotx, lemma2s_margin, planar_angles, probe_fxyz, probe_fyz, sph_distance, sph_full_rotation,
    sph_half_angle, sph_hull_of, sph_triangle_excess, theorem_s_check, SphPoint, SphTriangle,
};

type V3 = [f64; 3];

fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Signed solid angle of the triangle from the vector form of the excess.
fn solid_angle(a: V3, b: V3, c: V3) -> f64 {
    2.0 * dot(a, cross(b, c)).atan2(1.0 + dot(a, b) + dot(b, c) + dot(c, a))
}

fn cosine_rule(a: f64, b: f64, c: f64) -> f64 {
    ((a.cos() - b.cos() * c.cos()) / (b.sin() * c.sin()))
        .clamp(-1.0, 1.0)
        .acos()
}

fn triangle(seed: u64, i: u64, cap: f64) -> [SphPoint; 3] {
    let mut rng = instance_rng(seed, i);
    [0; 3].map(|_| sample_cap(&mut rng, cap))
}

#[test]
fn excess_matches_vector_form() {
    let mut worst = 0.0f64;
    for i in 0..20_000 {
        let [a, b, c] = triangle(1, i, 1.5);
        let t = SphTriangle::from_points(&a, &b, &c).unwrap();
        let e = solid_angle(a.xyz(), b.xyz(), c.xyz()).abs();
        worst = worst.max((t.excess - e).abs());
    }
    assert!(worst < 1e-9, "{worst:e}");
}

#[test]
fn half_angle_matches_cosine_rule() {
    for i in 0..20_000 {
        let [a, b, c] = triangle(2, i, 1.5);
        let t = SphTriangle::from_points(&a, &b, &c).unwrap();
        if t.a.min(t.b).min(t.c) < 1e-3 {
            continue;
        }
        let alpha = cosine_rule(t.a, t.b, t.c);
        assert!((t.alpha - alpha).abs() < 1e-6, "{} vs {alpha}", t.alpha);
        assert!((sph_half_angle(t.b, t.c, t.a).unwrap() - t.beta).abs() < 1e-12);
    }
}

#[test]
fn planar_angles_match_euclidean_cosine_rule() {
    for i in 0..5_000 {
        let [a, b, c] = triangle(3, i, 1.5);
        let t = SphTriangle::from_points(&a, &b, &c).unwrap();
        let (x, y, z) = planar_angles(t.a, t.b, t.c).unwrap();
        let euclid = |a: f64, b: f64, c: f64| ((b * b + c * c - a * a) / (2.0 * b * c)).acos();
        assert!((x - euclid(t.a, t.b, t.c)).abs() < 1e-6);
        assert!((y - euclid(t.b, t.c, t.a)).abs() < 1e-6);
        assert!((x + y + z - PI).abs() < 1e-9);
    }
}

#[test]
fn small_triangles_are_nearly_flat() {
    for i in 0..1_000 {
        let [a, b, c] = triangle(4, i, 0.01);
        let t = SphTriangle::from_points(&a, &b, &c).unwrap();
        // a triangle in a disk of radius r has area at most (3√3/4) r²
        assert!(t.excess < 1.4e-4);
        assert!((t.alpha - t.alpha_planar).abs() < 1e-3 || t.a.min(t.b).min(t.c) < 1e-5);
    }
}

#[test]
fn hull_area_matches_fan_of_solid_angles() {
    for i in 0..2_000 {
        let mut rng = instance_rng(5, i);
        let n = rng.gen_range(3..=10);
        let pts: Vec<SphPoint> = (0..n).map(|_| sample_cap(&mut rng, 1.3)).collect();
        let Ok(h) = sph_hull_of(&pts) else { continue };
        let v = &h.vertices;
        let fan: f64 = (1..v.len() - 1)
            .map(|k| solid_angle(v[0].xyz(), v[k].xyz(), v[k + 1].xyz()))
            .sum();
        assert!((h.area - fan).abs() < 1e-9, "{} vs {fan}", h.area);
        assert!(fan > 0.0, "hull must run counterclockwise");
        let per: f64 = (0..v.len())
            .map(|k| sph_distance(&v[k], &v[(k + 1) % v.len()]))
            .sum();
        assert!((h.perimeter - per).abs() < 1e-12);
        assert!(pts.iter().all(|p| h.contains(p, 1e-9)));
        assert!(v.iter().all(|c| pts.contains(c)));
    }
}

#[test]
fn hull_of_hull_is_itself() {
    for i in 0..500 {
        let mut rng = instance_rng(6, i);
        let pts: Vec<SphPoint> = (0..8).map(|_| sample_cap(&mut rng, 1.0)).collect();
        let h = sph_hull_of(&pts).unwrap();
        let again = sph_hull_of(&h.vertices).unwrap();
        assert_eq!(again.vertices.len(), h.vertices.len());
        assert!((again.area - h.area).abs() < 1e-12);
    }
}

#[test]
fn convex_polylines_turn_by_two_pi_minus_area() {
    for i in 0..500 {
        let mut rng = instance_rng(7, i);
        let pts: Vec<SphPoint> = (0..9).map(|_| sample_cap(&mut rng, 1.2)).collect();
        let h = sph_hull_of(&pts).unwrap();
        if h.vertices.len() < 3 {
            continue;
        }
        let p = dna_core::spherical::SphPolyline::new(h.vertices.clone()).unwrap();
        let v = sph_full_rotation(&p).unwrap();
        assert!((v - (TAU - h.area)).abs() < 1e-9);
        let verdict = theorem_s_check(&p).unwrap();
        assert!(verdict.margin.abs() < 1e-9);
    }
}

#[test]
fn random_polylines_satisfy_the_bound() {
    for i in 0..2_000 {
        let mut rng = instance_rng(8, i);
        let n = rng.gen_range(3..=8);
        let p = random_sph_polyline_with(&mut rng, n, 1.3).unwrap();
        let v = theorem_s_check(&p).unwrap();
        assert!(v.margin >= -1e-9, "instance {i}: {v:?}");
        assert!(v.length >= v.hull_perimeter - 1e-9);
    }
}

#[test]
fn random_quads_are_consistent() {
    for i in 0..1_000 {
        let q = random_sph_quad(i, 1.5).unwrap();
        let [a, b, c, d] = q.vertices;
        let excess =
            solid_angle(a.xyz(), b.xyz(), c.xyz()) + solid_angle(a.xyz(), c.xyz(), d.xyz());
        assert!((q.excess - excess).abs() < 1e-9);
        assert!((q.areas.iter().sum::<f64>() - q.excess).abs() < 1e-9);
        assert!((sph_distance(&a, &c) - q.n).abs() < 1e-12);
        assert!((sph_distance(&b, &d) - q.m).abs() < 1e-12);
        assert!(q.phi > 0.0 && q.phi < PI);
    }
}

#[test]
fn f_is_decreasing_and_log_concave_on_a_grid() {
    let xs: Vec<f64> = (0..4096).map(|k| FRAC_PI_2 * k as f64 / 4096.0).collect();
    let lf: Vec<f64> = xs.iter().map(|&x| f_xcotx(x).unwrap().ln()).collect();
    assert!(lf.windows(2).all(|w| w[1] < w[0]));
    assert!(lf.windows(3).all(|w| 2.0 * w[1] > w[0] + w[2]));
}

proptest! {
    #[test]
    fn excess_is_symmetric(a in 0.05f64..1.5, b in 0.05f64..1.5, c in 0.05f64..1.5) {
        prop_assume!(a < b + c && b < a + c && c < a + b);
        let e = sph_triangle_excess(a, b, c).unwrap();
        prop_assert!((e - sph_triangle_excess(b, c, a).unwrap()).abs() < 1e-12);
        prop_assert!((e - sph_triangle_excess(c, b, a).unwrap()).abs() < 1e-12);
        prop_assert!((0.0..TAU).contains(&e));
    }

    #[test]
    fn lemma2s_holds(a in 0.05f64..1.5, b in 0.05f64..1.5, c in 0.05f64..1.5) {
        prop_assume!(a < b + c - 1e-6 && b < a + c - 1e-6 && c < a + b - 1e-6);
        prop_assert!(lemma2s_margin(a, b, c).unwrap().margin > 0.0);
    }

    #[test]
    fn f_probes_hold(x in 1e-3f64..0.5, y in 1e-3f64..0.5, z in 1e-3f64..0.5) {
        prop_assert!(probe_fxyz(x, y, z).unwrap().margin > 0.0);
        prop_assert!(probe_fyz(y, z).unwrap().margin > 0.0);
    }
}

mod hull {
    use dna_core::spherical::*;
    use dna_core::tolerance::HEMISPHERE_MARGIN;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn octant() -> Vec<SphPoint> {
        vec![
            SphPoint::new(1.0, 0.0, 0.0).unwrap(),
            SphPoint::new(0.0, 1.0, 0.0).unwrap(),
            SphPoint::new(0.0, 0.0, 1.0).unwrap(),
        ]
    }

    #[test]
    fn witness_needs_open_hemisphere() {
        assert!(hemisphere_witness(&octant()).is_ok());
        let mut pts = octant();
        pts.push(SphPoint::new(-1.0, -1.0, -1.0).unwrap());
        assert!(hemisphere_witness(&pts).is_err());
        let eq: Vec<SphPoint> = (0..4)
            .map(|k| SphPoint::from_polar(FRAC_PI_2, k as f64 * FRAC_PI_2))
            .collect();
        assert!(hemisphere_witness(&eq).is_err());
    }

    #[test]
    fn witness_falls_back_when_sum_fails() {
        // many points crowd near one corner, pulling the sum off the cap
        let mut pts: Vec<SphPoint> = (0..50)
            .map(|k| SphPoint::from_polar(0.05, k as f64))
            .collect();
        pts.push(SphPoint::from_polar(1.55, 0.0));
        pts.push(SphPoint::from_polar(1.55, PI));
        let c = hemisphere_witness(&pts).unwrap();
        assert!(pts.iter().all(|p| p.dot(&c) >= HEMISPHERE_MARGIN));
    }

    #[test]
    fn octant_hull() {
        let mut pts = octant();
        pts.push(SphPoint::new(1.0, 1.0, 1.0).unwrap());
        pts.push(SphPoint::new(1.0, 2.0, 0.5).unwrap());
        let h = sph_hull_of(&pts).unwrap();
        assert_eq!(h.vertices.len(), 3);
        assert!((h.area - FRAC_PI_2).abs() < 1e-12);
        assert!((h.perimeter - 3.0 * FRAC_PI_2).abs() < 1e-12);
        assert!(pts.iter().all(|p| h.contains(p, 1e-9)));
        assert!(!h.contains(&SphPoint::new(-1.0, 1.0, 1.0).unwrap(), 1e-9));
    }
}

mod trig {
    use dna_core::spherical::*;
    use dna_core::GeomError;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, FRAC_PI_8, PI};

    #[test]
    fn octant_goldens() {
        let h = FRAC_PI_2;
        assert!((sph_triangle_excess(h, h, h).unwrap() - FRAC_PI_2).abs() < 1e-12);
        assert!((sph_half_angle(h, h, h).unwrap() - FRAC_PI_2).abs() < 1e-12);
        let (a, b, c) = planar_angles(h, h, h).unwrap();
        for x in [a, b, c] {
            assert!((x - FRAC_PI_3).abs() < 1e-12);
        }
        let t = SphTriangle::from_sides(h, h, h).unwrap();
        assert!((t.alpha + t.beta + t.gamma - PI - t.excess).abs() < 1e-12);
    }

    #[test]
    fn small_and_flat_triangles() {
        let s = 0.01;
        let e = sph_triangle_excess(s, s, s).unwrap();
        let planar = 3f64.sqrt() / 4.0 * s * s;
        assert!((e - planar).abs() < 0.01 * planar);
        assert_eq!(sph_triangle_excess(0.5, 0.2, 0.3).unwrap(), 0.0);
        assert!(sph_half_angle(0.5, 0.2, 0.3).is_err());
        assert!(sph_triangle_excess(0.7, 0.2, 0.3).is_err());
        assert!(sph_triangle_excess(3.0, 3.0, 1.0).is_err());
    }

    #[test]
    fn isosceles_planar_symmetry() {
        let (_, b, c) = planar_angles(0.4, 0.9, 0.9).unwrap();
        assert!((b - c).abs() < 1e-15);
        let (a, b, c) = planar_angles(0.3, 0.4, 0.5).unwrap();
        assert!((a + b + c - PI).abs() < 1e-12);
        assert!((c - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn lemma1s_examples() {
        let h = FRAC_PI_2;
        let m = lemma1s_margin(h, h, h).unwrap();
        assert!((m.margin - FRAC_PI_6).abs() < 1e-12);
        let m = lemma1s_margin(0.01, 0.008, 0.006).unwrap();
        assert!(m.margin > 0.0 && m.margin < 1e-4);
    }

    #[test]
    fn lemma2s_examples() {
        let h = FRAC_PI_2;
        let m = lemma2s_margin(h, h, h).unwrap();
        assert!((m.lhs - 2.0 / 3.0).abs() < 1e-12);
        assert!((m.rhs - 1.0).abs() < 1e-12);
        assert!((m.margin - 1.0 / 3.0).abs() < 1e-12);
        assert!(lemma2s_margin(1.2, 0.05, 1.2).unwrap().margin > 0.0);
    }

    #[test]
    fn f_values() {
        assert_eq!(f_xcotx(0.0).unwrap(), 1.0);
        assert!((f_xcotx(FRAC_PI_4).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!(matches!(f_xcotx(FRAC_PI_2), Err(GeomError::Domain(_))));
        assert!(matches!(f_xcotx(-0.1), Err(GeomError::Domain(_))));
        let m = probe_fyz(FRAC_PI_8, FRAC_PI_8).unwrap();
        // (π/8) cot(π/8) = (π/8)(1 + √2)
        let f8 = f_xcotx(FRAC_PI_8).unwrap();
        assert!((f8 - FRAC_PI_8 * (1.0 + 2f64.sqrt())).abs() < 1e-15);
        assert!((m.rhs - f8 * f8).abs() < 1e-15);
        assert!((m.lhs - FRAC_PI_4).abs() < 1e-15 && m.margin > 0.0);
        assert!(probe_fxyz(0.1, 0.3, 0.5).unwrap().margin > 0.0);
        assert!(probe_cos_sinc(1.0).unwrap().margin > 0.0);
        assert!(probe_cos_sinc(PI).is_err());
    }
}

mod quad {
    use dna_core::inequality::{lemma5_margin, ConvexQuad2};
    use dna_core::planar::Point2;
    use dna_core::spherical::*;
    use std::f64::consts::FRAC_PI_2;

    fn square(r: f64, rot: f64) -> [SphPoint; 4] {
        [0, 1, 2, 3].map(|k| SphPoint::from_polar(r, rot + k as f64 * FRAC_PI_2))
    }

    #[test]
    fn square_at_pole() {
        let [a, b, c, d] = square(0.5, 0.0);
        let q = SphQuad::new(a, b, c, d).unwrap();
        assert!((q.o.xyz()[2] - 1.0).abs() < 1e-12);
        assert!((q.phi - FRAC_PI_2).abs() < 1e-12);
        assert!((q.z() - (q.x() + 1.0) / (q.x() + q.y())).abs() < 1e-12);
        let whole = sph_triangle_excess(q.a, q.b, q.n).unwrap()
            + sph_triangle_excess(q.c, q.d, q.n).unwrap();
        assert!((q.excess - whole).abs() < 1e-9);
        assert!(lemma3s_margin(&q).margin > 0.0);
    }

    #[test]
    fn clockwise_input_is_reordered() {
        let [a, b, c, d] = square(0.5, 0.3);
        let q1 = SphQuad::new(a, b, c, d).unwrap();
        let q2 = SphQuad::new(a, d, c, b).unwrap();
        assert_eq!(q1.vertices, q2.vertices);
    }

    #[test]
    fn non_convex_rejected() {
        let [a, b, c, _] = square(0.5, 0.0);
        let inner = SphPoint::from_polar(0.1, FRAC_PI_2);
        assert!(SphQuad::new(a, b, c, inner).is_err());
        assert!(SphQuad::new(a, c, b, square(0.5, 0.0)[3]).is_err());
    }

    #[test]
    fn shrinking_quad_tends_to_planar() {
        let pts = [(0.0, 0.0), (1.0, 0.1), (1.2, 0.9), (0.2, 1.1)];
        let s = 1e-3;
        let sph = pts.map(|(x, y)| SphPoint::new(s * x, s * y, 1.0).unwrap());
        let q = SphQuad::new(sph[0], sph[1], sph[2], sph[3]).unwrap();
        let p = pts.map(|(x, y)| Point2::new(s * x, s * y));
        let planar = lemma5_margin(&ConvexQuad2::new(p[0], p[1], p[2], p[3]).unwrap());
        assert!((lemma3s_margin(&q).margin - planar.margin).abs() < 1e-4);
    }
}

mod point {
    use dna_core::spherical::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn p(x: f64, y: f64, z: f64) -> SphPoint {
        SphPoint::new(x, y, z).unwrap()
    }

    #[test]
    fn distances() {
        let e1 = p(1.0, 0.0, 0.0);
        let e2 = p(0.0, 1.0, 0.0);
        assert_eq!(sph_distance(&e1, &e1), 0.0);
        assert!((sph_distance(&e1, &e2) - FRAC_PI_2).abs() < 1e-15);
        assert!((sph_distance(&e1, &e1.antipode()) - PI).abs() < 1e-15);
    }

    #[test]
    fn angles() {
        let (e1, e2, e3) = (p(1.0, 0.0, 0.0), p(0.0, 1.0, 0.0), p(0.0, 0.0, 1.0));
        assert!((sph_angle(&e1, &e2, &e3).unwrap() - FRAC_PI_2).abs() < 1e-15);
        let g = |t: f64| SphPoint::from_polar(FRAC_PI_2, t);
        assert!((sph_angle(&g(0.0), &g(0.5), &g(1.2)).unwrap() - PI).abs() < 1e-12);
        // circumradius of an equilateral triangle of side 0.1
        let s = 0.1 / 3f64.sqrt();
        let a = SphPoint::from_polar(s, 0.0);
        let b = SphPoint::from_polar(s, 2.0 * PI / 3.0);
        let c = SphPoint::from_polar(s, 4.0 * PI / 3.0);
        assert!((sph_distance(&a, &b) - 0.1).abs() < 1e-4);
        assert!((sph_angle(&a, &b, &c).unwrap() - FRAC_PI_3).abs() < 2e-3);
        assert!(sph_angle(&e1, &e1, &e2).is_err());
        assert!(sph_angle(&e1.antipode(), &e1, &e2).is_err());
    }

    #[test]
    fn construction() {
        assert!(SphPoint::new(0.0, 0.0, 0.0).is_err());
        assert!(SphPoint::from_unit([1.0, 0.0, 1e-7], 1e-6).is_ok());
        assert!(SphPoint::from_unit([1.1, 0.0, 0.0], 1e-6).is_err());
        let q: SphPoint = serde_json::from_str("[0, 3, 4]").unwrap();
        let v = q.xyz();
        assert!(v[0] == 0.0 && (v[1] - 0.6).abs() < 1e-15 && (v[2] - 0.8).abs() < 1e-15);
        assert!(serde_json::from_str::<SphPoint>("[0, 0, 0]").is_err());
    }
}

mod polyline {
    use dna_core::spherical::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn octant() -> SphPolyline {
        SphPolyline::new(vec![
            SphPoint::new(1.0, 0.0, 0.0).unwrap(),
            SphPoint::new(0.0, 1.0, 0.0).unwrap(),
            SphPoint::new(0.0, 0.0, 1.0).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn octant_metrics() {
        let p = octant();
        assert!((sph_full_rotation(&p).unwrap() - 3.0 * FRAC_PI_2).abs() < 1e-12);
        assert!((p.length() - 3.0 * FRAC_PI_2).abs() < 1e-12);
        assert!((sph_mean_curvature(&p).unwrap() - 1.0).abs() < 1e-12);
        let d = p.repeated(2);
        assert!((sph_full_rotation(&d).unwrap() - 3.0 * PI).abs() < 1e-12);
        assert!((sph_mean_curvature(&d).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn octant_theorem_equality() {
        let v = theorem_s_check(&octant()).unwrap();
        assert!((v.curvature - 1.0).abs() < 1e-9);
        assert!((v.hull_curvature - 1.0).abs() < 1e-9);
        assert!(v.margin.abs() < 1e-9);
        let d = theorem_s_check(&octant().repeated(2)).unwrap();
        assert!(d.margin.abs() < 1e-9);
    }

    #[test]
    fn star_near_pole_beats_hull() {
        let star: Vec<SphPoint> = [0, 2, 4, 1, 3]
            .iter()
            .map(|&k| SphPoint::from_polar(0.2, k as f64 * TAU / 5.0))
            .collect();
        let v = theorem_s_check(&SphPolyline::new(star).unwrap()).unwrap();
        assert!(v.margin > 0.0);
    }

    #[test]
    fn rejects_bad_polylines() {
        let e = |x, y, z| SphPoint::new(x, y, z).unwrap();
        assert!(SphPolyline::new(vec![e(1.0, 0.0, 0.0), e(0.0, 1.0, 0.0)]).is_err());
        assert!(
            SphPolyline::new(vec![e(1.0, 0.0, 0.0), e(1.0, 0.0, 0.0), e(0.0, 1.0, 0.0)]).is_err()
        );
        assert!(
            SphPolyline::new(vec![e(1.0, 0.0, 0.0), e(0.0, 1.0, 0.0), e(-1.0, 0.0, 0.0)]).is_err()
        );
    }
}
