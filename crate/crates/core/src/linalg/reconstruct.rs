//! Lifting modular rows back to integers.

use num_integer::Integer;

use super::fp::Modulus;

/// Multiplies `row` by `scale`, lifts each entry to its symmetric
/// representative and divides by the gcd of the entries. An all-zero row is
/// returned as zeros.
pub fn rational_reconstruct(row: &[u32], modulus: Modulus, scale: u64) -> Vec<i64> {
    let s = (scale % modulus.p()) as u32;
    let mut v: Vec<i64> = row.iter().map(|&x| modulus.symmetric(modulus.mul(x, s))).collect();
    let g = v.iter().fold(0i64, |g, x| g.gcd(x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
    v
}

/// Smallest scale in `1..=max_scale` whose symmetric lift has every entry
/// bounded by `bound` in absolute value.
pub fn find_scale(row: &[u32], modulus: Modulus, max_scale: u64, bound: i64) -> Option<u64> {
    (1..=max_scale).find(|&s| {
        let s32 = (s % modulus.p()) as u32;
        row.iter().all(|&x| modulus.symmetric(modulus.mul(x, s32)).abs() <= bound)
    })
}

/// Default size bound for accepting a lift: `floor(sqrt(p / 2))`.
pub fn default_bound(modulus: Modulus) -> i64 {
    ((modulus.p() / 2) as f64).sqrt() as i64
}

/// Reconstructs with the smallest acceptable scale, if any.
pub fn reconstruct_auto(row: &[u32], modulus: Modulus, max_scale: u64, bound: i64) -> Option<(u64, Vec<i64>)> {
    let s = find_scale(row, modulus, max_scale, bound)?;
    Some((s, rational_reconstruct(row, modulus, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_lift_and_content() {
        let m = Modulus::new(1_000_003).unwrap();
        assert_eq!(rational_reconstruct(&[999_998], m, 1), vec![-1]);
        assert_eq!(rational_reconstruct(&[999_998, 0], m, 1), vec![-1, 0]);
        assert_eq!(rational_reconstruct(&[999_998, 10], m, 1), vec![-1, 2]);
        assert_eq!(rational_reconstruct(&[0, 0], m, 4), vec![0, 0]);
        // 1/4 and 3/4 become 1 and 3
        let q = m.from_ratio(1, 4);
        let t = m.from_ratio(3, 4);
        assert_eq!(rational_reconstruct(&[q, t, 1], m, 4), vec![1, 3, 4]);
        assert_eq!(find_scale(&[q, t, 1], m, 720, default_bound(m)), Some(4));
    }
}
