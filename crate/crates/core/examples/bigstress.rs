use fox_tangle::hurwitz::{act, connect, normal_form_delta0, normal_form_general, BraidLetter, BraidWord};
use fox_tangle::{BoundaryVector, RingSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

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

fn main() {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut fail = 0u32;
    let mut slow = 0u32;
    let t0 = Instant::now();
    let n_trials = 3000;
    for trial in 0..n_trials {
        let m = 2 + (trial % 2);
        let v = random_vector(&mut rng, m, 10);
        let t = Instant::now();
        match normal_form_general(&v) {
            Ok(nf) => assert_eq!(act(&v, &nf.witness).unwrap(), nf.normal),
            Err(e) => {
                fail += 1;
                println!("NF FAIL {v}: {e}");
            }
        }
        if t.elapsed().as_millis() > 500 {
            slow += 1;
            println!("slow nf {}ms: {v}", t.elapsed().as_millis());
        }
    }
    println!("normal_form: {fail} failures, {slow} slow, {n_trials} trials, total {:?}", t0.elapsed());

    let t0 = Instant::now();
    let mut fail = 0u32;
    for trial in 0..1500 {
        let m = 2 + (trial % 2);
        let v = random_vector(&mut rng, m, 8);
        let len = rng.gen_range(0..14);
        let letters = (0..len)
            .map(|_| BraidLetter { index: rng.gen_range(1..2 * m), inverse: rng.gen_bool(0.5) })
            .collect();
        let w = BraidWord::new(2 * m, letters).unwrap();
        let u = act(&v, &w).unwrap();
        match connect(&v, &u) {
            Ok(found) => assert_eq!(act(&v, &found).unwrap(), u),
            Err(e) => {
                fail += 1;
                println!("CONNECT FAIL {v} -> {u}: {e}");
            }
        }
    }
    println!("connect: {fail} failures, total {:?}", t0.elapsed());

    // delta0 with forced balance
    let t0 = Instant::now();
    let mut fail = 0u32;
    let mut done = 0;
    while done < 800 {
        let m = 2 + (done % 2);
        let v = random_vector(&mut rng, m, 10);
        if !num_traits::Zero::is_zero(&v.delta()) {
            continue;
        }
        done += 1;
        match normal_form_delta0(&v) {
            Ok(nf) => assert_eq!(act(&v, &nf.witness).unwrap(), nf.normal),
            Err(e) => {
                fail += 1;
                println!("D0 FAIL {v}: {e}");
            }
        }
    }
    println!("delta0: {fail} failures, total {:?}", t0.elapsed());
}
