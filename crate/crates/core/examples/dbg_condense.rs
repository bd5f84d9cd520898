use fox_tangle::hurwitz::debug_condense;

fn main() {
    for v in [
        vec![0i64, -7, 8, 9, 9, -3],
        vec![0, -18, 1, 1, 1, 1],
        vec![0, -7, 8, -4, 4, -1],
        vec![0, 0, 0, -24, 1, 1],
        vec![0, 15, 5, 17, 14, 10],
        vec![0, 0, 0, 23, 1, 1],
    ] {
        let (state, len) = debug_condense(&v);
        println!("{v:?} -> {state:?}  ({len} macro moves)");
    }
}
