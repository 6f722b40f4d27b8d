use super::corequot::from_charges_quotient;
use super::Partition;

/// All partitions of n, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(n: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::new(cur.clone()).expect("generated partition"));
        return;
    }
    for k in (1..=n.min(max)).rev() {
        cur.push(k as u32);
        fill(n - k, k, cur, out);
        cur.pop();
    }
}

/// All ℓ-tuples of partitions with total size n.
pub fn multipartitions(n: usize, ell: usize) -> Vec<Vec<Partition>> {
    if ell == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for first in partitions(k) {
            for rest in multipartitions(n - k, ell - 1) {
                let mut v = Vec::with_capacity(ell);
                v.push(first.clone());
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out
}

/// All partitions with the given ℓ-core charge vector and quotient size n,
/// in multipartition enumeration order.
pub fn family(charges: &[i64], n: usize) -> Vec<Partition> {
    multipartitions(n, charges.len())
        .into_iter()
        .map(|q| from_charges_quotient(charges, &q).expect("valid charges"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(multipartitions(2, 3).len(), 9);
        assert_eq!(multipartitions(3, 2).len(), 10);
        assert_eq!(multipartitions(0, 3), vec![vec![Partition::empty(); 3]]);
    }
}
