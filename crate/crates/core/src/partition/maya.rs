use super::{Partition, PartitionError};

/// A Maya diagram m: ℤ → {black, white}, black below the stored window and
/// white above it.  Indices increase leftward when drawn; the central notch
/// sits between 0 and −1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MayaDiagram {
    /// Position of pattern[0].
    offset: i64,
    /// true = black.
    pattern: Vec<bool>,
}

impl MayaDiagram {
    pub fn vacuum() -> Self {
        MayaDiagram { offset: 0, pattern: Vec::new() }
    }

    /// Builds the diagram whose colour at n ∈ [lo, hi) is `black(n)`,
    /// black below lo and white from hi on.
    pub fn from_fn<F: Fn(i64) -> bool>(lo: i64, hi: i64, black: F) -> Self {
        let mut m = MayaDiagram { offset: lo, pattern: (lo..hi).map(black).collect() };
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        let lead = self.pattern.iter().take_while(|&&b| b).count();
        self.pattern.drain(..lead);
        self.offset += lead as i64;
        while self.pattern.last() == Some(&false) {
            self.pattern.pop();
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn pattern(&self) -> &[bool] {
        &self.pattern
    }

    /// Lowest index of the stored window.
    pub fn lo(&self) -> i64 {
        self.offset
    }

    /// One past the highest index of the stored window.
    pub fn hi(&self) -> i64 {
        self.offset + self.pattern.len() as i64
    }

    pub fn is_black(&self, n: i64) -> bool {
        if n < self.lo() {
            true
        } else if n >= self.hi() {
            false
        } else {
            self.pattern[(n - self.offset) as usize]
        }
    }

    /// Number of white beads at negative positions minus black beads at
    /// nonnegative positions.
    pub fn charge(&self) -> i64 {
        let lo = self.lo().min(0);
        let hi = self.hi().max(0);
        let mut c = 0;
        for n in lo..hi {
            let b = self.is_black(n);
            if n < 0 && !b {
                c += 1;
            }
            if n >= 0 && b {
                c -= 1;
            }
        }
        c
    }

    /// The diagram n ↦ m(n − s); its charge is charge(m) − s.
    pub fn shifted(&self, s: i64) -> Self {
        let mut m = self.clone();
        m.offset += s;
        m
    }

    /// n ↦ m(i + nℓ).
    pub fn residue(&self, i: usize, ell: usize) -> Self {
        let (i, l) = (i as i64, ell as i64);
        let lo = (self.lo() - i).div_euclid(l) - 1;
        let hi = (self.hi() - i).div_euclid(l) + 2;
        MayaDiagram::from_fn(lo, hi, |n| self.is_black(i + n * l))
    }

    /// Inverse of taking residues: m(n) = parts[n mod ℓ](n div ℓ).
    pub fn interleave(parts: &[MayaDiagram]) -> Self {
        let l = parts.len() as i64;
        let lo = parts.iter().map(|m| m.lo() * l).min().unwrap_or(0) - l;
        let hi = parts.iter().map(|m| m.hi() * l).max().unwrap_or(0) + l;
        MayaDiagram::from_fn(lo, hi, |n| parts[n.rem_euclid(l) as usize].is_black(n.div_euclid(l)))
    }

    /// Black beads at {ᵗλ_j − j : j ≥ 1}.
    pub fn from_partition(lambda: &Partition) -> Self {
        let conj = lambda.transpose();
        let w = conj.len() as i64;
        let blacks: Vec<i64> = (1..=w).map(|j| conj.row(j as usize) as i64 - j).collect();
        let hi = blacks.first().map(|&b| b + 1).unwrap_or(0).max(0);
        MayaDiagram::from_fn(-w - 1, hi, |n| n < -w || blacks.contains(&n))
    }

    /// Reads back the partition of a charge-zero diagram.
    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        let c = self.charge();
        if c != 0 {
            return Err(PartitionError::Charge(c));
        }
        let mut conj = Vec::new();
        // below the window every bead is black and, at charge zero, the
        // remaining parts n + j vanish
        let mut j = 1;
        for n in (self.lo()..self.hi()).rev() {
            if self.is_black(n) {
                let part = n + j;
                if part > 0 {
                    conj.push(part as u32);
                }
                j += 1;
            }
        }
        Ok(Partition::new(conj).expect("charge-zero diagram gives a partition").transpose())
    }

    /// ASCII picture over [lo, hi), largest index on the left, with the
    /// notch between 0 and −1 drawn as '|'.  '#' is black, '.' is white.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        let mut s = String::new();
        for n in (lo..hi).rev() {
            s.push(if self.is_black(n) { '#' } else { '.' });
            if n == 0 {
                s.push('|');
            }
        }
        s
    }
}
