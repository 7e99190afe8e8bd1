use std::collections::HashSet;

use ferrers::bounds::{
    bound_for_height, count_subfigures_rect, enumerate_subfigures, floor_lg_int, pi_lower_bound,
    verify_lemma1, verify_theorem, SweepOptions,
};
use ferrers::diagram::to_diagram;
use ferrers::primes::prime_count;
use ferrers::{Partition, RectDims};

/// All nonincreasing sequences in {0..=j}^i, zeros stripped; odometer walk.
fn brute_force_count(i: usize, j: u64) -> usize {
    let mut digits = vec![0u64; i];
    let mut seen = HashSet::new();
    loop {
        if digits.windows(2).all(|w| w[0] >= w[1]) {
            let rows: Vec<u64> = digits.iter().copied().filter(|&r| r > 0).collect();
            seen.insert(rows);
        }
        let mut pos = 0;
        loop {
            if pos == i {
                return seen.len();
            }
            digits[pos] += 1;
            if digits[pos] <= j {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn rectangle_enumeration_is_complete_and_counted() {
    for i in 0..=8u64 {
        for j in 0..=8u64 {
            let rect = Partition::rectangle(i, j);
            let found = enumerate_subfigures(&rect);
            let expected = count_subfigures_rect(RectDims::new(i, j)).unwrap();
            assert_eq!(found.len() as u128, expected, "{i}x{j}");
            let distinct: HashSet<&Partition> = found.iter().collect();
            assert_eq!(distinct.len(), found.len());
            assert!(found.iter().all(|f| f.is_subfigure_of(&rect)));
        }
    }
    assert_eq!(brute_force_count(8, 8), 12870);
    for i in 0..=6 {
        for j in 0..=6 {
            let rect = Partition::rectangle(i as u64, j);
            assert_eq!(enumerate_subfigures(&rect).len(), brute_force_count(i, j));
        }
    }
}

#[test]
fn lemma1_holds_to_2000() {
    let r = verify_lemma1(2000, &SweepOptions::with_jobs(4)).unwrap();
    assert_eq!(r.cases_checked, 4_000_000);
    assert!(
        r.holds(),
        "{:?}",
        &r.counterexamples[..r.counterexamples.len().min(5)]
    );
}

#[test]
fn theorem_sweep_to_1e5() {
    let r = verify_theorem(100_000, &SweepOptions::with_jobs(4), None).unwrap();
    assert_eq!(r.cases_checked, 99_999);
    assert!(
        r.holds(),
        "{:?}",
        &r.counterexamples[..r.counterexamples.len().min(5)]
    );
}

#[test]
fn bound_below_pi_to_1e6() {
    for x in 2..=1_000_000u64 {
        let b = pi_lower_bound(x as f64).unwrap();
        assert!(prime_count(x as f64).unwrap() as f64 >= b, "x = {x}");
    }
}

#[test]
fn bound_is_unbounded() {
    let values: Vec<f64> = (1..=4096).map(|h| bound_for_height(h).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]));
    assert!(bound_for_height(1024).unwrap() > 100.0);
    assert_eq!(
        pi_lower_bound(2f64.powi(1000)).unwrap(),
        bound_for_height(1000).unwrap()
    );
}

#[test]
fn witnesses_up_to_1e4() {
    // Oracle: recompute the maxima from scratch for every x.
    let dims: Vec<(u64, u64)> = (1..=10_000u64)
        .map(|n| {
            let d = to_diagram(n).unwrap();
            (d.height(), d.width())
        })
        .collect();
    for x in 2..=10_000usize {
        let prefix = &dims[..x];
        let (argmax_h, max_h) = prefix
            .iter()
            .enumerate()
            .map(|(i, d)| (i + 1, d.0))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        let (argmax_w, max_w) = prefix
            .iter()
            .enumerate()
            .map(|(i, d)| (i + 1, d.1))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        let h = floor_lg_int(x as u64).unwrap();
        let w = prime_count(x as f64).unwrap();
        assert_eq!(max_h, u64::from(h));
        assert_eq!(argmax_h, 1 << h);
        assert_eq!(max_w, w);
        assert_eq!(argmax_w as u64, ferrers::primes::nth_prime(w));
    }
}
