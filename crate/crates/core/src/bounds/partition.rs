use super::BoundError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub parts: Vec<u64>,
    pub self_associate: bool,
    /// Nodes on the main diagonal.
    pub diagonal: u64,
    /// `diagonal = n (mod 4)`.
    pub congruence_ok: bool,
}

/// Conjugate partition.
pub fn associate(parts: &[u64]) -> Vec<u64> {
    let first = parts.first().copied().unwrap_or(0);
    (1..=first).map(|j| parts.iter().filter(|&&x| x >= j).count() as u64).collect()
}

pub fn diagonal_count(parts: &[u64]) -> u64 {
    parts.iter().enumerate().filter(|&(i, &x)| x > i as u64).count() as u64
}

/// A self-associate partition of `n >= 13` with `k = n (mod 4)` diagonal nodes.
pub fn splitting_partition(n: u64) -> Result<SplitPartition, BoundError> {
    if n < 13 {
        return Err(BoundError::PartitionTooSmall(n));
    }
    let ones = |c: u64| std::iter::repeat_n(1, c as usize);
    let parts: Vec<u64> = match n % 4 {
        1 => std::iter::once(n.div_ceil(2)).chain(ones((n - 1) / 2)).collect(),
        2 => [n / 2, 2].into_iter().chain(ones(n / 2 - 2)).collect(),
        3 => [(n - 3) / 2, 3, 3].into_iter().chain(ones((n - 9) / 2)).collect(),
        // Hook of n - 9 with a 3x3 square added in rows and columns 2..4.
        _ => [(n - 8) / 2, 4, 4, 4].into_iter().chain(ones((n - 16) / 2)).collect(),
    };
    let diagonal = diagonal_count(&parts);
    Ok(SplitPartition {
        self_associate: associate(&parts) == parts && parts.iter().sum::<u64>() == n,
        congruence_ok: diagonal % 4 == n % 4,
        diagonal,
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let p = splitting_partition(13).unwrap();
        assert_eq!(p.parts, vec![7, 1, 1, 1, 1, 1, 1]);
        assert_eq!(p.diagonal, 1);
        assert_eq!(splitting_partition(14).unwrap().parts, vec![7, 2, 1, 1, 1, 1, 1]);
        assert_eq!(splitting_partition(15).unwrap().parts, vec![6, 3, 3, 1, 1, 1]);
        let p = splitting_partition(16).unwrap();
        assert_eq!(p.parts, vec![4, 4, 4, 4]);
        assert_eq!(p.diagonal, 4);
        assert!(splitting_partition(12).is_err());
    }

    #[test]
    fn all_checks_hold() {
        for n in 13..=1000 {
            let p = splitting_partition(n).unwrap();
            assert_eq!(p.parts.iter().sum::<u64>(), n);
            assert!(p.parts.windows(2).all(|w| w[0] >= w[1]), "n = {n}");
            assert!(p.self_associate && p.congruence_ok, "n = {n}");
        }
    }

    #[test]
    fn associates() {
        assert_eq!(associate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(associate(&[]), Vec::<u64>::new());
        assert_eq!(diagonal_count(&[3, 3, 1]), 2);
    }
}
