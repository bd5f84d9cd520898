use fox_tangle::hurwitz::debug_drive;

fn main() {
    let cases = [
        (vec![0i64, -7, 8, -4, 4, -1], vec![0i64, 0, 0, -24, 1, 1]),
        (vec![0, -9, 6, -14, 3, -9], vec![0, 0, 0, -41, 1, 1]),
        (vec![0, -7, 8, 9, 9, -3], vec![0, -18, 1, 1, 1, 1]),
    ];
    for (from, to) in cases {
        println!("{from:?} -> {to:?}: {:?}", debug_drive(&from, &to));
    }
}
