use num_traits::{Signed, Zero};

use super::{ArithError, Int, Rat};

/// Standard Bernoulli number `B_n` (convention `B_1 = -1/2`), computed with
/// the Akiyama–Tanigawa transform.
pub fn bernoulli_standard(n: usize) -> Rat {
    let mut row: Vec<Rat> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(Rat::new(Int::from(1), Int::from(m + 1)));
        for j in (1..=m).rev() {
            let v = (&row[j - 1] - &row[j]) * Rat::from_integer(Int::from(j));
            row[j - 1] = v;
        }
    }
    let b = row.swap_remove(0);
    if n == 1 {
        -b
    } else {
        b
    }
}

/// Bernoulli number in Hirzebruch's indexing: `B_k = |B_{2k}|`, so
/// `B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...`. Always positive.
pub fn bernoulli(k: usize) -> Result<Rat, ArithError> {
    if k.is_zero() {
        return Err(ArithError::BernoulliIndex);
    }
    Ok(bernoulli_standard(2 * k).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_index() {
        assert_eq!(bernoulli(0), Err(ArithError::BernoulliIndex));
    }

    #[test]
    fn odd_standard_values_vanish() {
        assert_eq!(bernoulli_standard(1), Rat::new((-1).into(), 2.into()));
        for n in [3, 5, 7, 21] {
            assert!(bernoulli_standard(n).is_zero());
        }
    }
}
