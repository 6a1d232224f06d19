//! Network layout: m identical n-dimensional subsystems and the neighborhood
//! structure that defines which generator terms count as quasi-local.
//!
//! Subsystem indices are 0-based in the API; the JSON form uses 1-based
//! indices to match the on-disk spec format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkLayout {
    m: usize,
    n: usize,
    neighborhoods: Vec<Vec<usize>>,
    /// strides[s] = n^(m-1-s): subsystem 0 is the most significant digit.
    strides: Vec<usize>,
}

impl NetworkLayout {
    pub fn new(m: usize, n: usize, neighborhoods: Vec<Vec<usize>>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidLayout {
                reason: format!("need at least 2 subsystems, got {m}"),
            });
        }
        if n < 2 {
            return Err(Error::InvalidLayout {
                reason: format!("local dimension must be at least 2, got {n}"),
            });
        }
        let mut cleaned = Vec::with_capacity(neighborhoods.len());
        for (j, raw) in neighborhoods.into_iter().enumerate() {
            if raw.is_empty() {
                return Err(Error::InvalidLayout {
                    reason: format!("neighborhood {j} is empty"),
                });
            }
            let mut nb = raw;
            nb.sort_unstable();
            nb.dedup();
            if let Some(&bad) = nb.iter().find(|&&i| i >= m) {
                return Err(Error::InvalidLayout {
                    reason: format!("neighborhood {j} refers to subsystem {bad} but m = {m}"),
                });
            }
            cleaned.push(nb);
        }
        let mut strides = vec![1usize; m];
        for s in (0..m.saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * n;
        }
        Ok(Self {
            m,
            n,
            neighborhoods: cleaned,
            strides,
        })
    }

    /// Path-graph layout: neighborhoods {0,1}, {1,2}, ..., {m-2, m-1}.
    pub fn path(m: usize, n: usize) -> Result<Self> {
        let nbs = (0..m.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
        Self::new(m, n, nbs)
    }

    /// Single neighborhood covering the whole network.
    pub fn complete(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, vec![(0..m).collect()])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighborhoods(&self) -> &[Vec<usize>] {
        &self.neighborhoods
    }

    pub fn neighborhood(&self, j: usize) -> Result<&[usize]> {
        self.neighborhoods
            .get(j)
            .map(|v| v.as_slice())
            .ok_or(Error::IndexOutOfRange {
                index: j,
                m: self.neighborhoods.len(),
            })
    }

    /// Full network dimension n^m.
    pub fn dim(&self) -> usize {
        self.strides[0] * self.n
    }

    /// Base-n digit of `index` at subsystem `slot`.
    #[inline]
    pub fn digit(&self, index: usize, slot: usize) -> usize {
        (index / self.strides[slot]) % self.n
    }

    #[inline]
    pub fn stride(&self, slot: usize) -> usize {
        self.strides[slot]
    }

    /// Basis index with the given digits (one per subsystem).
    pub fn index_of_digits(&self, digits: &[usize]) -> Result<usize> {
        if digits.len() != self.m {
            return Err(Error::DimensionMismatch {
                left: digits.len(),
                right: self.m,
                context: "index_of_digits",
            });
        }
        let mut idx = 0;
        for (s, &d) in digits.iter().enumerate() {
            if d >= self.n {
                return Err(Error::ArgumentRange {
                    reason: format!("digit {d} at slot {s} exceeds n = {}", self.n),
                });
            }
            idx += d * self.strides[s];
        }
        Ok(idx)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutRepr {
    m: usize,
    n: usize,
    /// 1-based subsystem indices.
    neighborhoods: Vec<Vec<usize>>,
}

impl Serialize for NetworkLayout {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LayoutRepr {
            m: self.m,
            n: self.n,
            neighborhoods: self
                .neighborhoods
                .iter()
                .map(|nb| nb.iter().map(|i| i + 1).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NetworkLayout {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = LayoutRepr::deserialize(d)?;
        for nb in &repr.neighborhoods {
            if nb.contains(&0) {
                return Err(serde::de::Error::custom(
                    "neighborhood indices are 1-based; 0 is not a valid subsystem",
                ));
            }
        }
        let zero_based = repr
            .neighborhoods
            .into_iter()
            .map(|nb| nb.into_iter().map(|i| i - 1).collect())
            .collect();
        NetworkLayout::new(repr.m, repr.n, zero_based).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_msb_first() {
        let layout = NetworkLayout::path(3, 2).unwrap();
        assert_eq!(layout.dim(), 8);
        // index 6 = 0b110: digits (1, 1, 0) with subsystem 0 most significant
        assert_eq!(layout.digit(6, 0), 1);
        assert_eq!(layout.digit(6, 1), 1);
        assert_eq!(layout.digit(6, 2), 0);
        assert_eq!(layout.index_of_digits(&[1, 1, 0]).unwrap(), 6);
    }

    #[test]
    fn rejects_small_m_and_empty_neighborhood() {
        assert!(NetworkLayout::new(1, 2, vec![vec![0]]).is_err());
        assert!(NetworkLayout::new(2, 2, vec![vec![]]).is_err());
        assert!(NetworkLayout::new(2, 2, vec![vec![5]]).is_err());
    }

    #[test]
    fn serde_uses_one_based_indices() {
        let layout = NetworkLayout::path(3, 2).unwrap();
        let json = serde_json::to_string(&layout).unwrap();
        assert!(json.contains("[[1,2],[2,3]]"));
        let back: NetworkLayout = serde_json::from_str(&json).unwrap();
        assert_eq!(layout, back);
    }
}
