//! Integer partitions with the pairing and hook products used by the
//! partition-sum form of the representation series.

use super::scalar::{pow_rat, Rat};
use num_traits::One;

/// An integer partition stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate part vector: `conj[j] = #{i : parts[i] > j}` for `j < max part`.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let max = self.0[0] as usize;
        let mut conj = vec![0u32; max];
        for &p in &self.0 {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(conj)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// All partitions of `n`, in descending lexicographic order of the part
/// vectors: `(n)` first, `(1,...,1)` last. `partitions_of(0)` is the empty
/// partition alone.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen(n, n, &mut current, &mut out);
    out
}

fn gen(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        current.push(p);
        gen(remaining - p, p, current, out);
        current.pop();
    }
}

/// `<lambda, mu> = sum_j lambda'_j mu'_j` over conjugate parts.
pub fn partition_pairing(lambda: &Partition, mu: &Partition) -> u64 {
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    lc.parts()
        .iter()
        .zip(mc.parts().iter())
        .map(|(&a, &b)| a as u64 * b as u64)
        .sum()
}

/// `b_lambda(t) = prod_j prod_{m=1..mult_j} (1 - t^m)`, evaluated exactly.
pub fn b_poly_at(lambda: &Partition, t: &Rat) -> Rat {
    let mut acc = Rat::one();
    for (_, mult) in lambda.multiplicities() {
        for m in 1..=mult {
            acc *= Rat::one() - pow_rat(t, m as i64);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat, rat_frac};

    #[test]
    fn enumeration_order_and_counts() {
        let p4: Vec<Vec<u32>> = partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            p4,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(0).len(), 1);
        assert!(partitions_of(0)[0].is_empty());
        assert_eq!(partitions_of(6).len(), 11);
    }

    // p(n) against the pentagonal-number recurrence, n <= 20.
    #[test]
    fn counts_match_pentagonal_recurrence() {
        let mut p = vec![1i64];
        for n in 1..=20i64 {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 > n && g2 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                if g1 <= n {
                    total += sign * p[(n - g1) as usize];
                }
                if g2 <= n {
                    total += sign * p[(n - g2) as usize];
                }
                k += 1;
            }
            p.push(total);
            assert_eq!(
                partitions_of(n as u32).len() as i64,
                total,
                "p({}) mismatch",
                n
            );
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(
            Partition::new(vec![3, 1]).conjugate(),
            Partition::new(vec![2, 1, 1])
        );
        assert_eq!(
            Partition::new(vec![2, 2]).conjugate(),
            Partition::new(vec![2, 2])
        );
        let p = Partition::new(vec![5, 3, 3, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn pairing_values() {
        let p22 = Partition::new(vec![2, 2]);
        assert_eq!(partition_pairing(&p22, &p22), 8);
        for d in 1..=6u32 {
            let ones = Partition::new(vec![1; d as usize]);
            assert_eq!(partition_pairing(&ones, &ones), (d as u64) * (d as u64));
        }
        let a = Partition::new(vec![3, 1]);
        let b = Partition::new(vec![2, 2, 1]);
        assert_eq!(partition_pairing(&a, &b), partition_pairing(&b, &a));
    }

    #[test]
    fn b_poly_values() {
        let p21 = Partition::new(vec![2, 1]);
        assert_eq!(b_poly_at(&p21, &rat_frac(1, 3)), rat_frac(4, 9));
        let p11 = Partition::new(vec![1, 1]);
        assert_eq!(b_poly_at(&p11, &rat_frac(1, 2)), rat_frac(3, 8));
        assert_eq!(b_poly_at(&Partition::empty(), &rat_frac(1, 5)), rat(1));
    }
}
