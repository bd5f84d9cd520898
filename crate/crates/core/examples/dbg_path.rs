use fox_tangle::hurwitz::debug_box_bfs;

fn main() {
    // hard instances
    let cases = [
        (vec![0i64, -7, 8, 9, 9, -3], vec![0i64, -18, 1, 1, 1, 1]),
        (vec![0, -7, 8, -4, 4, -1], vec![0, 0, 0, -24, 1, 1]),
        (vec![-17, -17, -18, 0], vec![1, 1, -18, 0]),
    ];
    for (from, to) in cases {
        for cap in [200_000usize, 2_000_000, 20_000_000] {
            let r = debug_box_bfs(&from, &to, cap);
            println!("{from:?} -> {to:?} cap {cap}: {r:?}");
            if r.is_some() {
                break;
            }
        }
    }
}
