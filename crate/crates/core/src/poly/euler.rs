use num_bigint::BigInt;
use num_traits::Zero;

/// Euler (up/down) numbers `E_0, …, E_max`: 1, 1, 1, 2, 5, 16, 61, 272, …
///
/// Computed with the Seidel boustrophedon.
pub fn euler_numbers(max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1)];
    let mut row = vec![BigInt::from(1)];
    for _ in 1..=max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::zero());
        for v in row.iter().rev() {
            let s = next.last().unwrap() + v;
            next.push(s);
        }
        out.push(next.last().unwrap().clone());
        row = next;
    }
    out
}

pub fn euler_number(n: usize) -> BigInt {
    euler_numbers(n).pop().unwrap()
}
