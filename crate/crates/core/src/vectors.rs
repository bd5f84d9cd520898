//! Boundary color vectors in R^2m and their orbit invariants: the
//! alternating sum, the gcd of pairwise entry differences, its 2-adic
//! valuation, and the multiset of residues modulo twice the gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::RingSpec;

/// A vector of endpoint colors read in cyclic order along the boundary.
/// The length is always even (2m endpoints for m strings); entries are
/// canonicalized representatives of the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryVector {
    ring: RingSpec,
    entries: Vec<BigInt>,
}

/// The four quantities attached to a vector. `d`, `k`, and `m_multiset`
/// are only defined for nontrivial integer vectors and are reported as
/// absent otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub delta: BigInt,
    pub trivial: bool,
    pub d: Option<BigInt>,
    pub k: Option<u32>,
    /// Entries reduced mod 2d, canonicalized to 0..2d-1 and sorted.
    pub m_multiset: Option<Vec<BigInt>>,
}

/// Decomposition a_i = a1 + d * b_i of a nontrivial integer vector, with
/// b_1 = 0 and the b_i having pairwise-difference gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedDecomposition {
    pub a1: BigInt,
    pub d: BigInt,
    pub w: BoundaryVector,
}

impl BoundaryVector {
    pub fn new(ring: RingSpec, entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() || entries.len() % 2 != 0 {
            return Err(Error::BadVectorLength(entries.len()));
        }
        let entries = entries.iter().map(|x| ring.canonicalize(x)).collect();
        Ok(BoundaryVector { ring, entries })
    }

    pub fn from_i64(ring: RingSpec, entries: &[i64]) -> Result<Self> {
        Self::new(ring, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Parses a comma-separated integer list such as "1,7,-5,-11".
    pub fn parse(input: &str, ring: RingSpec) -> Result<Self> {
        let entries = input
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, entries)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is at least 2 by construction
    }

    pub fn m(&self) -> usize {
        self.entries.len() / 2
    }

    /// Entry at a cyclic index (0-based, taken mod 2m).
    pub fn entry_cyclic(&self, i: usize) -> &BigInt {
        &self.entries[i % self.entries.len()]
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|x| *x == self.entries[0])
    }

    /// The alternating sum a_1 - a_2 + a_3 - ... in the coefficient ring.
    pub fn delta(&self) -> BigInt {
        let mut sum = BigInt::zero();
        for (i, a) in self.entries.iter().enumerate() {
            if i % 2 == 0 {
                sum += a;
            } else {
                sum -= a;
            }
        }
        self.ring.canonicalize(&sum)
    }

    /// gcd of all pairwise entry differences, computed as
    /// gcd { a_i - a_1 : i >= 2 }. None for trivial vectors.
    pub fn diff_gcd(&self) -> Option<BigInt> {
        if self.is_trivial() {
            return None;
        }
        let a1 = &self.entries[0];
        let mut g = BigInt::zero();
        for a in &self.entries[1..] {
            g = g.gcd(&(a - a1));
        }
        debug_assert!(g.is_positive());
        Some(g)
    }

    pub fn invariants(&self) -> InvariantReport {
        let delta = self.delta();
        let trivial = self.is_trivial();
        if trivial || !self.ring.is_integers() {
            return InvariantReport { delta, trivial, d: None, k: None, m_multiset: None };
        }
        let d = self.diff_gcd().expect("nontrivial");
        let k = two_adic_valuation(&d);
        let two_d = &d * 2;
        let mut m_multiset: Vec<BigInt> =
            self.entries.iter().map(|a| a.mod_floor(&two_d)).collect();
        m_multiset.sort();
        InvariantReport { delta, trivial, d: Some(d), k: Some(k), m_multiset: Some(m_multiset) }
    }

    /// Writes a_i = a_1 + d * b_i and returns (a_1, d, w) with w = (b_i).
    pub fn associated(&self) -> Result<AssociatedDecomposition> {
        if !self.ring.is_integers() {
            return Err(Error::IntegersRequired(self.ring.modulus().unwrap()));
        }
        let d = self.diff_gcd().ok_or(Error::TrivialVector)?;
        let a1 = self.entries[0].clone();
        let w = self
            .entries
            .iter()
            .map(|a| {
                let (q, r) = (a - &a1).div_rem(&d);
                debug_assert!(r.is_zero());
                q
            })
            .collect();
        let w = BoundaryVector::new(RingSpec::Integers, w)?;
        Ok(AssociatedDecomposition { a1, d, w })
    }

    /// Whether 2^(k+1) divides the alternating sum, where k is the 2-adic
    /// valuation of the pairwise-difference gcd.
    pub fn divisibility_certificate(&self) -> Result<bool> {
        if !self.ring.is_integers() {
            return Err(Error::IntegersRequired(self.ring.modulus().unwrap()));
        }
        let d = self.diff_gcd().ok_or(Error::TrivialVector)?;
        let k = two_adic_valuation(&d);
        let modulus = BigInt::one() << (k + 1);
        Ok(self.delta().mod_floor(&modulus).is_zero())
    }

    /// Number of odd entries.
    pub fn odd_count(&self) -> usize {
        self.entries.iter().filter(|a| a.is_odd()).count()
    }

    /// Entrywise map, staying in the same ring.
    pub fn map_entries(&self, f: impl Fn(&BigInt) -> BigInt) -> Result<Self> {
        BoundaryVector::new(self.ring, self.entries.iter().map(f).collect())
    }
}

impl std::fmt::Display for BoundaryVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", body.join(","))
    }
}

/// Exact exponent of 2 in a positive integer.
pub fn two_adic_valuation(d: &BigInt) -> u32 {
    debug_assert!(d.is_positive());
    d.trailing_zeros().unwrap_or(0) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zv(entries: &[i64]) -> BoundaryVector {
        BoundaryVector::from_i64(RingSpec::Integers, entries).unwrap()
    }

    // Independent oracle: gcd over all ordered pairs i != j.
    fn all_pairs_gcd(entries: &[i64]) -> BigInt {
        let mut g = BigInt::zero();
        for i in 0..entries.len() {
            for j in 0..entries.len() {
                if i != j {
                    g = g.gcd(&BigInt::from(entries[i] - entries[j]));
                }
            }
        }
        g
    }

    #[test]
    fn triviality() {
        assert!(zv(&[5, 5, 5, 5]).is_trivial());
        assert!(!zv(&[1, 7, -5, -11]).is_trivial());
        assert!(!zv(&[0, 3, 3, 2]).is_trivial());
    }

    #[test]
    fn alternating_sum() {
        assert_eq!(zv(&[1, 7, -5, -11]).delta(), BigInt::zero());
        assert_eq!(zv(&[0, 3, 3, 2]).delta(), BigInt::from(-2));
        assert_eq!(zv(&[4, 4, 4, 4, 4, 4]).delta(), BigInt::zero());
    }

    #[test]
    fn worked_invariants() {
        let rep = zv(&[1, 7, -5, -11]).invariants();
        assert_eq!(rep.delta, BigInt::zero());
        assert_eq!(rep.d, Some(BigInt::from(6)));
        assert_eq!(rep.k, Some(1));
        assert_eq!(
            rep.m_multiset,
            Some(vec![1, 1, 7, 7].into_iter().map(BigInt::from).collect())
        );
    }

    #[test]
    fn derived_invariants() {
        let rep = zv(&[0, 3, 3, 2]).invariants();
        assert_eq!(rep.delta, BigInt::from(-2));
        assert_eq!(rep.d, Some(all_pairs_gcd(&[0, 3, 3, 2])));
        assert_eq!(rep.d, Some(BigInt::one()));
        assert_eq!(rep.k, Some(0));
        assert_eq!(
            rep.m_multiset,
            Some(vec![0, 0, 1, 1].into_iter().map(BigInt::from).collect())
        );

        let rep = zv(&[2, 6, 10, 2]).invariants();
        assert_eq!(rep.delta, BigInt::from(4));
        assert_eq!(rep.d, Some(all_pairs_gcd(&[2, 6, 10, 2])));
        assert_eq!(rep.d, Some(BigInt::from(4)));
        assert_eq!(rep.k, Some(2));
        assert_eq!(
            rep.m_multiset,
            Some(vec![2, 2, 2, 6].into_iter().map(BigInt::from).collect())
        );
    }

    #[test]
    fn trivial_vector_has_no_d() {
        let rep = zv(&[5, 5, 5, 5]).invariants();
        assert!(rep.trivial);
        assert_eq!(rep.d, None);
        assert_eq!(rep.k, None);
        assert_eq!(rep.m_multiset, None);
    }

    #[test]
    fn mod_p_reports_delta_only() {
        let v = BoundaryVector::from_i64(RingSpec::mod_p(3).unwrap(), &[0, 1, 1, 2]).unwrap();
        let rep = v.invariants();
        assert_eq!(rep.delta, BigInt::from(1)); // -2 = 1 mod 3
        assert_eq!(rep.d, None);
    }

    #[test]
    fn associated_decomposition() {
        let dec = zv(&[1, 7, -5, -11]).associated().unwrap();
        assert_eq!(dec.a1, BigInt::one());
        assert_eq!(dec.d, BigInt::from(6));
        assert_eq!(dec.w, zv(&[0, 1, -1, -2]));
        // Recheck the defining identity a_i = a1 + d*b_i.
        for (a, b) in zv(&[1, 7, -5, -11]).entries().iter().zip(dec.w.entries()) {
            assert_eq!(*a, &dec.a1 + &dec.d * b);
        }

        let dec = zv(&[0, 1, 0, 1]).associated().unwrap();
        assert_eq!(dec.d, BigInt::one());
        assert_eq!(dec.w, zv(&[0, 1, 0, 1]));

        assert_eq!(zv(&[5, 5, 5, 5]).associated(), Err(Error::TrivialVector));
    }

    #[test]
    fn divisibility() {
        assert_eq!(zv(&[0, 3, 3, 2]).divisibility_certificate(), Ok(true));
        assert_eq!(zv(&[2, 6, 10, 2]).divisibility_certificate(), Ok(false));
        assert_eq!(zv(&[0, 1, 1, 1]).divisibility_certificate(), Ok(false));
        assert_eq!(zv(&[5, 5, 5, 5]).divisibility_certificate(), Err(Error::TrivialVector));
    }

    #[test]
    fn parsing() {
        let v = BoundaryVector::parse("1, 7, -5 , -11", RingSpec::Integers).unwrap();
        assert_eq!(v, zv(&[1, 7, -5, -11]));
        assert!(BoundaryVector::parse("1,2,3", RingSpec::Integers).is_err());
        assert!(BoundaryVector::parse("1,x", RingSpec::Integers).is_err());
    }

    #[test]
    fn mod_p_canonicalization() {
        let v = BoundaryVector::from_i64(RingSpec::mod_p(5).unwrap(), &[-1, 7]).unwrap();
        assert_eq!(v.entries(), &[BigInt::from(4), BigInt::from(2)]);
    }
}
