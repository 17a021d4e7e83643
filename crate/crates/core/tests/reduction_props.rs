mod common;

use common::*;
use onecenter::metrics::{edit_distance, ulam_edit, Metric, Value};
use onecenter::reductions::{
    gen_hitting_set, hamming_to_ulam, hsc_brute_force, hsc_to_lp, make_edit_codec, pad_client, pad_facilities_edit,
    pad_facility, sink, GenMode, HittingSetInstance,
};
use onecenter::solvers::PointSet;
use proptest::prelude::*;

fn bits(d: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), d)
}

fn binary(m: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(prop_oneof![Just(b'0'), Just(b'1')], m)
}

fn row(p: &PointSet, i: usize) -> Vec<i64> {
    p.int_point(i).unwrap().to_vec()
}

#[test]
fn hamming_to_ulam_exhaustive() {
    for d in 0..=4usize {
        let all: Vec<Vec<bool>> = (0..1u32 << d).map(|m| (0..d).map(|k| (m >> k) & 1 == 1).collect()).collect();
        for a in &all {
            for b in &all {
                let (pa, pb) = (hamming_to_ulam(a), hamming_to_ulam(b));
                assert_eq!(ulam_edit(&pa, &pb).unwrap(), 2 * hamming(a, b));
                assert_eq!(ulam_oracle(pa.as_slice(), pb.as_slice()), 2 * hamming(a, b));
            }
        }
    }
}

proptest! {
    #[test]
    fn hamming_to_ulam_random((a, b) in (5usize..=10).prop_flat_map(|d| (bits(d), bits(d)))) {
        let (pa, pb) = (hamming_to_ulam(&a), hamming_to_ulam(&b));
        prop_assert_eq!(ulam_oracle(pa.as_slice(), pb.as_slice()), 2 * hamming(&a, &b));
    }

    #[test]
    fn edit_codec_preserves_hamming(seed in any::<u64>(), (a, b) in (bits(12), bits(12))) {
        let codec = make_edit_codec(12, seed).unwrap();
        let (ea, eb) = (codec.encode(&a).unwrap(), codec.encode(&b).unwrap());
        prop_assert_eq!(ea.len(), 12 * (codec.block_len + 1));
        prop_assert_eq!(full_dp_edit(&ea, &eb), hamming(&a, &b));
    }

    #[test]
    fn padding_relations((x, y) in (1usize..=12).prop_flat_map(|m| (binary(m), binary(m)))) {
        let m = x.len();
        prop_assert!(full_dp_edit(&pad_facility(&x), &pad_facility(&y)) <= m);
        prop_assert!(full_dp_edit(&pad_facility(&x), &sink(m)) <= 2 * m);
        // Only the upper bound holds in general; see
        // `facility_client_distance_can_drop_below_2m_plus_t`.
        let cross = full_dp_edit(&pad_facility(&x), &pad_client(&y));
        prop_assert!(cross <= 2 * m + full_dp_edit(&x, &y));
        prop_assert!(cross >= 2 * m);
        prop_assert!(full_dp_edit(&pad_client(&x), &sink(m)) >= 3 * m);
    }

    #[test]
    fn gadget_distances(n in 1usize..6, m in 1usize..8, seed in any::<u64>()) {
        let inst = gen_hitting_set(n, m, GenMode::Random { density: 0.4 }, seed).unwrap();
        let g = hsc_to_lp(&inst, Metric::L1).unwrap();
        let m = m as i64;
        prop_assert_eq!(g.points.dim(), 5 * inst.m + 2);
        let s = row(&g.points, g.special_index());
        for (i, &a) in inst.a.iter().enumerate() {
            let ta = row(&g.points, i);
            prop_assert_eq!(l1_dist(&ta, &s), 2 * m + 1);
            for k in 0..n {
                prop_assert!(l1_dist(&ta, &row(&g.points, k)) <= 2 * m);
            }
            for (j, &b) in inst.b.iter().enumerate() {
                let common = i64::from((a & b).count_ones());
                prop_assert_eq!(l1_dist(&ta, &row(&g.points, n + j)), 3 * m + 1 - 2 * common);
            }
        }
        for j in 0..n {
            prop_assert_eq!(l1_dist(&row(&g.points, n + j), &s), 3 * m + 2);
        }
    }

    #[test]
    fn gadget_decides_hitting_set(n in 1usize..8, m in 1usize..7, mode in 0u8..3, seed in any::<u64>()) {
        let mode = [GenMode::Random { density: 0.5 }, GenMode::PlantedYes, GenMode::PlantedNo][mode as usize];
        let inst = gen_hitting_set(n, m, mode, seed).unwrap();
        let truth = hsc_brute_force(&inst);
        if let Some(planted) = inst.planted_answer {
            prop_assert_eq!(planted, truth);
        }
        for metric in [Metric::Hamming, Metric::L1, Metric::Lp(2.0)] {
            let g = hsc_to_lp(&inst, metric).unwrap();
            let min = g.min_eccentricity().unwrap();
            if truth {
                prop_assert!(min <= Value::Int(3 * m as i128));
            } else {
                prop_assert!(min >= Value::Int(3 * m as i128 + 1));
            }
            prop_assert_eq!(g.decide().unwrap(), truth);
        }
    }
}

#[test]
fn generators_are_reproducible() {
    for mode in [GenMode::Random { density: 0.3 }, GenMode::PlantedYes, GenMode::PlantedNo] {
        assert_eq!(gen_hitting_set(9, 11, mode, 42).unwrap(), gen_hitting_set(9, 11, mode, 42).unwrap());
    }
    assert_eq!(make_edit_codec(32, 9).unwrap(), make_edit_codec(32, 9).unwrap());
    let f = vec![b"0110".to_vec()];
    assert_eq!(pad_facilities_edit(&f, &f).unwrap(), pad_facilities_edit(&f, &f).unwrap());
}

#[test]
fn small_examples() {
    let inst = HittingSetInstance::new(3, vec![0b111], vec![0b001]).unwrap();
    assert!(hsc_brute_force(&inst));
    let inst = gen_hitting_set(2, 4, GenMode::PlantedNo, 7).unwrap();
    assert!(!hsc_brute_force(&inst));
    assert_eq!(edit_distance(&pad_facility(b"01"), &pad_client(b"11")), 5);
    assert_eq!(edit_distance(&pad_facility(b"101"), &pad_client(b"101")), 6);
}

#[test]
fn facility_client_distance_can_drop_below_2m_plus_t() {
    // 11010000 -> 11101111: delete the third character, then fix the tail
    // with four edits.
    let (x, y) = (b"01", b"10");
    assert_eq!(full_dp_edit(x, y), 2);
    assert_eq!(full_dp_edit(&pad_facility(x), &pad_client(y)), 5);
    assert_eq!(edit_distance(&pad_facility(x), &pad_client(y)), 5);
}

#[test]
fn codec_separation_at_moderate_d() {
    for d in [32, 64] {
        let codec = make_edit_codec(d, 0).unwrap();
        let min = codec.separation();
        for (i, x) in codec.blocks.iter().enumerate() {
            for y in &codec.blocks[i + 1..] {
                assert!(full_dp_edit(x, y) >= min);
            }
        }
    }
}
