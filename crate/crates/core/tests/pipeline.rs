mod common;

use cmdeficiency::analysis::{analyze, AnalyzeOptions};
use cmdeficiency::deficiency::{deficiency_evaluated, deficiency_symbolic};
use cmdeficiency::frame::{build_frame, AmbientChoice, AmbientFrame, AmbientKind};
use cmdeficiency::hilbert::secondary_degrees;
use cmdeficiency::modp::{
    in_integral_module, integral_denominator, is_good_prime, membership_modp,
};
use cmdeficiency::orbit::orbit_sum;
use cmdeficiency::parse::parse_group;
use cmdeficiency::poly::{discriminant, Monomial, SparsePoly};
use cmdeficiency::secondary::{complete_secondaries, universal_secondaries, Secondary};
use num_bigint::BigInt;

use common::*;

fn frame_of(text: &str, ambient: AmbientChoice) -> AmbientFrame {
    build_frame(&parse_group(text).unwrap().group().unwrap(), ambient).unwrap()
}

fn reference_order20(frame: &AmbientFrame) -> Vec<Secondary> {
    let g = frame.subgroup();
    let mut out = vec![Secondary::one(5)];
    for e in [
        [2, 1, 1, 0, 0],
        [2, 2, 1, 0, 0],
        [3, 2, 1, 0, 0],
        [3, 2, 1, 0, 1],
        [4, 3, 0, 1, 0],
    ] {
        out.push(Secondary::orbit_sum(g, &mono(&e)).unwrap());
    }
    out
}

#[test]
fn order20_report() {
    let r = analyze(&parse_group(ORDER_20).unwrap(), &AnalyzeOptions::default()).unwrap();
    assert_eq!(r.group.order, 20);
    assert_eq!(r.index, 6);
    assert_eq!(r.secondary_degrees, vec![0, 4, 5, 6, 7, 8]);
    assert_eq!(r.deficiency, "2");
    assert_eq!(r.bad_primes, vec![2]);
    assert_eq!(r.delta_degree, 30);
}

#[test]
fn order20_reference_secondaries() {
    let frame = frame_of(ORDER_20, AmbientChoice::Auto);
    let thetas = reference_order20(&frame);
    let degrees: Vec<u32> = thetas.iter().map(|t| t.degree).collect();
    assert_eq!(degrees, vec![0, 4, 5, 6, 7, 8]);
    let polys: Vec<SparsePoly> = thetas.iter().map(|t| t.poly.clone()).collect();
    let (sym, _) = deficiency_symbolic(&frame, &polys).unwrap();
    assert_eq!(sym.deficiency, BigInt::from(2));
    let z: Vec<BigInt> = [3, 1, 4, 15, 9].map(BigInt::from).to_vec();
    assert_eq!(
        brute_deficiency(frame.subgroup(), &polys, &z),
        BigInt::from(2)
    );
}

#[test]
fn order20_witness() {
    let frame = frame_of(ORDER_20, AmbientChoice::Auto);
    let thetas = reference_order20(&frame);
    let g = frame.subgroup();
    let f = orbit_sum(g, &mono(&[4, 3, 2, 1, 0]));

    let two = is_good_prime(&frame, &thetas, 2).unwrap();
    assert!(!two.is_good);
    let w = two.witness.unwrap();
    assert_eq!(w.degree, 10);
    assert_eq!(w.image_rank + 1, w.dimension);
    for p in [3, 5] {
        assert!(
            is_good_prime(&frame, &thetas, p).unwrap().is_good,
            "p = {p}"
        );
    }

    assert!(!membership_modp(&frame, &thetas, &f, 2).unwrap());
    assert!(membership_modp(&frame, &thetas, &f, 3).unwrap());
    assert!(!in_integral_module(&frame, &thetas, &f).unwrap());
    assert!(in_integral_module(&frame, &thetas, &f.scale(&BigInt::from(2))).unwrap());
    assert_eq!(
        integral_denominator(&frame, &thetas, &f).unwrap(),
        BigInt::from(2)
    );

    let polys: Vec<SparsePoly> = thetas.iter().map(|t| t.poly.clone()).collect();
    assert_eq!(
        brute_membership_denominator(g, &polys, &f),
        Some(BigInt::from(2))
    );
}

#[test]
fn order36_deficiency_at_every_default_point() {
    let frame = frame_of(ORDER_36, AmbientChoice::Auto);
    assert_eq!(frame.subgroup().order(), 36);
    let h = secondary_degrees(&frame).unwrap();
    assert_eq!(h.degrees.len(), 20);
    assert_eq!(h.degrees.iter().filter(|&&d| d == 7).count(), 2);
    for z in frame.default_points() {
        let set = universal_secondaries(&frame, &h, Some(&z)).unwrap();
        let rep = deficiency_evaluated(&frame, &set.polys(), &z).unwrap();
        assert_eq!(rep.deficiency, BigInt::from(8));
        assert_eq!(rep.bad_primes, vec![2]);
    }
}

#[test]
fn alternating_groups() {
    for n in 3..=5 {
        let frame = frame_of(&alternating(n), AmbientChoice::Auto);
        let h = secondary_degrees(&frame).unwrap();
        assert_eq!(h.degrees, vec![0, (n * (n - 1) / 2) as u32]);
        let set = universal_secondaries(&frame, &h, None).unwrap();
        let (rep, det) = deficiency_symbolic(&frame, &set.polys()).unwrap();
        assert_eq!(rep.deficiency, BigInt::from(1));
        let (prim, disc) = (det.primitive_part(), discriminant(n));
        assert!(prim == disc || prim == -&disc);

        let disc = Secondary::from_poly(frame.subgroup(), &discriminant(n)).unwrap();
        let forced = complete_secondaries(&frame, &h, &[disc], None).unwrap();
        let (rep, _) = deficiency_symbolic(&frame, &forced.polys()).unwrap();
        assert_eq!(rep.deficiency, BigInt::from(2));
    }
}

#[test]
fn even_signed_groups() {
    for n in 3..=5 {
        let text = format!(
            "n={n}; gens=[{}];(1,2);({})",
            (1..=n as i64)
                .map(|i| if i <= 2 { -i } else { i })
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(","),
            (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        );
        let frame = frame_of(&text, AmbientChoice::Auto);
        assert_eq!(frame.kind(), AmbientKind::Hyperoctahedral);
        assert_eq!(frame.index(), 2);
        let exps = vec![1u32; n];
        assert_eq!(
            frame.discriminant_poly(),
            SparsePoly::monomial(n, Monomial::new(&exps), 1)
        );
        let r = analyze(&parse_group(&text).unwrap(), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.secondary_degrees, vec![0, n as u32]);
        assert_eq!(r.deficiency, "2");
        assert_eq!(r.det_sign, -1);
    }
}

#[test]
fn young_alternating_group() {
    let r = analyze(
        &parse_group(YOUNG_ALT_5).unwrap(),
        &AnalyzeOptions::default(),
    )
    .unwrap();
    assert_eq!(r.group.order, 6);
    assert_eq!(r.ambient.kind, AmbientKind::Young);
    assert_eq!(r.index, 2);
    assert_eq!(r.deficiency, "1");
}

#[test]
fn hilbert_degrees_match_orbit_counts() {
    for text in [
        ORDER_20,
        YOUNG_ALT_5,
        "n=4; gens=(1,2,3,4)",
        "n=4; gens=(1,2)(3,4);(1,3)(2,4)",
    ] {
        let frame = frame_of(text, AmbientChoice::Symmetric);
        let h = secondary_degrees(&frame).unwrap();
        let n = frame.rank();
        for d in 0..=12u32 {
            // dim of the S_n-invariants of degree e = partitions of e into at most n parts
            let expected: usize = h
                .degrees
                .iter()
                .filter(|&&a| a <= d)
                .map(|&a| partitions_at_most(d - a, n))
                .sum();
            assert_eq!(
                brute_invariant_dimension(frame.subgroup(), d),
                expected,
                "{text}, degree {d}"
            );
        }
    }
}

fn partitions_at_most(e: u32, parts: usize) -> usize {
    fn rec(e: u32, max: u32, parts: usize) -> usize {
        if e == 0 {
            return 1;
        }
        if parts == 0 {
            return 0;
        }
        (1..=max.min(e)).map(|k| rec(e - k, k, parts - 1)).sum()
    }
    rec(e, e, parts)
}

#[test]
fn orbit_sums_agree_with_brute_force() {
    let g = order20_group();
    for e in [
        [4, 3, 2, 1, 0],
        [2, 1, 1, 0, 0],
        [1, 1, 1, 1, 1],
        [3, 0, 0, 0, 0],
    ] {
        let m = mono(&e);
        assert_eq!(orbit_sum(&g, &m), brute_orbit_sum(&g, &m));
    }
}

#[test]
fn delta_exponents_agree_with_coset_cycles() {
    for text in [
        ORDER_20,
        ORDER_36,
        "n=4; gens=(1,2,3,4)",
        "n=5; gens=(1,2,3,4,5)",
    ] {
        let frame = frame_of(text, AmbientChoice::Symmetric);
        let brute = brute_difference_exponents(frame.subgroup());
        let z: Vec<BigInt> = [2, 3, 5, 7, 11, 13][..frame.rank()]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(
            frame.discriminant_at(&z),
            brute_delta_at(frame.subgroup(), &z),
            "{text}"
        );
        assert_eq!(
            frame.discriminant_degree(),
            brute.values().sum::<u64>(),
            "{text}"
        );
    }
}
