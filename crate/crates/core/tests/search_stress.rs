//! Stress coverage for the witness searches: random vectors at the scales
//! the library is expected to handle, plus the structured vector pairs used
//! by the virtual construction.

use fox_tangle::hurwitz::{
    act, bfs_witness, connect, normal_form_delta0, normal_form_general, orbit_equivalent,
    BraidLetter, BraidWord,
};
use fox_tangle::{BoundaryVector, RingSpec};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn zv(entries: &[i64]) -> BoundaryVector {
    BoundaryVector::from_i64(RingSpec::Integers, entries).unwrap()
}

fn random_vector(rng: &mut StdRng, m: usize, bound: i64) -> BoundaryVector {
    loop {
        let entries: Vec<i64> = (0..2 * m).map(|_| rng.gen_range(-bound..=bound)).collect();
        if entries.iter().any(|&x| x != entries[0]) {
            return zv(&entries);
        }
    }
}

fn random_word(rng: &mut StdRng, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| BraidLetter { index: rng.gen_range(1..strands), inverse: rng.gen_bool(0.5) })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

#[test]
fn normal_forms_random_small() {
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..400 {
        let m = if trial % 2 == 0 { 2 } else { 3 };
        let v = random_vector(&mut rng, m, 10);
        let nf = normal_form_general(&v)
            .unwrap_or_else(|e| panic!("trial {trial}: {v} failed: {e}"));
        assert_eq!(act(&v, &nf.witness).unwrap(), nf.normal);
    }
}

#[test]
fn delta0_random_small() {
    let mut rng = StdRng::seed_from_u64(8);
    let mut done = 0;
    while done < 150 {
        let m = if done % 2 == 0 { 2 } else { 3 };
        let v = random_vector(&mut rng, m, 10);
        if !num_traits::Zero::is_zero(&v.delta()) {
            continue;
        }
        let nf = normal_form_delta0(&v).unwrap_or_else(|e| panic!("{v} failed: {e}"));
        assert_eq!(act(&v, &nf.witness).unwrap(), nf.normal);
        done += 1;
    }
}

#[test]
fn connect_random_orbit_pairs() {
    let mut rng = StdRng::seed_from_u64(9);
    for trial in 0..200 {
        let m = if trial % 2 == 0 { 2 } else { 3 };
        let v = random_vector(&mut rng, m, 8);
        let len = rng.gen_range(0..12);
        let w = random_word(&mut rng, 2 * m, len);
        let u = act(&v, &w).unwrap();
        let found = connect(&v, &u)
            .unwrap_or_else(|e| panic!("trial {trial}: {v} -> {u} failed: {e}"));
        assert_eq!(act(&v, &found).unwrap(), u);
    }
}

// The structured pairs from the one-virtual-crossing construction: the spike
// vector (0,...,0,2n,1,...,1) must connect to (0,...,0,n,1-n,1,...,1), and the
// odd-spike analogue likewise, for spike values up to a few hundred.
#[test]
fn connect_construction_pairs() {
    for n_tot in [4usize, 6] {
        for i in 2..n_tot {
            for spike in 1..40i64 {
                if i % 2 == 0 {
                    // even position: lambda = 2n
                    let lam = 2 * spike;
                    let mut v0 = vec![0i64; n_tot];
                    v0[i - 1] = lam;
                    for slot in v0.iter_mut().skip(i) {
                        *slot = 1;
                    }
                    let mut v1 = vec![0i64; n_tot];
                    v1[i - 1] = spike;
                    v1[i] = 1 - spike;
                    for slot in v1.iter_mut().skip(i + 1) {
                        *slot = 1;
                    }
                    let (v0, v1) = (zv(&v0), zv(&v1));
                    assert!(orbit_equivalent(&v0, &v1).unwrap(), "{v0} vs {v1}");
                    let w = connect(&v0, &v1)
                        .unwrap_or_else(|e| panic!("{v0} -> {v1}: {e}"));
                    assert_eq!(act(&v0, &w).unwrap(), v1);
                } else if i >= 3 {
                    // odd position: lambda = 2n - 1
                    let lam = 2 * spike - 1;
                    let mut v0 = vec![0i64; n_tot];
                    v0[i - 1] = lam;
                    for slot in v0.iter_mut().skip(i) {
                        *slot = 1;
                    }
                    let mut v1 = vec![0i64; n_tot];
                    v1[i - 2] = 1 - spike;
                    v1[i - 1] = spike;
                    for slot in v1.iter_mut().skip(i) {
                        *slot = 1;
                    }
                    let (v0, v1) = (zv(&v0), zv(&v1));
                    assert!(orbit_equivalent(&v0, &v1).unwrap(), "{v0} vs {v1}");
                    let w = connect(&v0, &v1)
                        .unwrap_or_else(|e| panic!("{v0} -> {v1}: {e}"));
                    assert_eq!(act(&v0, &w).unwrap(), v1);
                }
            }
        }
    }
}

#[test]
fn oracle_agrees_with_decision() {
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..40 {
        let v = random_vector(&mut rng, 2, 3);
        let u = random_vector(&mut rng, 2, 3);
        let found = bfs_witness(&v, &u, 8).unwrap();
        if let Some(w) = &found {
            assert_eq!(act(&v, w).unwrap(), u);
            assert!(orbit_equivalent(&v, &u).unwrap());
        }
        if !orbit_equivalent(&v, &u).unwrap() {
            assert!(found.is_none());
        }
    }
}

#[test]
fn conservation_larger_entries() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let m = rng.gen_range(2..=4);
        let v = random_vector(&mut rng, m, 50);
        let len = rng.gen_range(0..=20);
        let w = random_word(&mut rng, 2 * m, len);
        let u = act(&v, &w).unwrap();
        let (iv, iu) = (v.invariants(), u.invariants());
        assert_eq!(iv.delta, iu.delta);
        assert_eq!(iv.d, iu.d);
        assert_eq!(iv.m_multiset, iu.m_multiset);
        assert_eq!(act(&u, &w.inverse()).unwrap(), v);
    }
}

// Entries can grow exponentially along a word; exact arithmetic must hold up.
#[test]
fn big_entry_growth() {
    let v = zv(&[0, 1, 2, 3]);
    let mut w = BraidWord::identity(4);
    for _ in 0..80 {
        w = w
            .concat(&BraidWord::parse("s1 s2^-1", 4).unwrap())
            .unwrap();
    }
    let u = act(&v, &w).unwrap();
    assert_eq!(act(&u, &w.inverse()).unwrap(), v);
    let big: BigInt = u.entries().iter().map(|x| num_traits::Signed::abs(x)).sum();
    assert!(big > BigInt::from(u64::MAX));
}
