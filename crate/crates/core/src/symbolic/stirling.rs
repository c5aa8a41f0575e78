use crate::error::{HornError, Result};

/// Largest row served by [`stirling2`]; second-order systems never need more.
pub const STIRLING_CAP: usize = 4;

/// Stirling numbers of the second kind, S(k, i) for 0 ≤ i ≤ k ≤ max.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<u64>>,
}

impl StirlingTable {
    pub fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=max {
            let prev = &rows[k - 1];
            let mut row = vec![0u64; k + 1];
            for i in 1..=k {
                let a = if i < prev.len() { prev[i] } else { 0 };
                row[i] = i as u64 * a + prev[i - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, k: usize, i: usize) -> Option<u64> {
        self.rows.get(k).and_then(|r| r.get(i)).copied()
    }
}

pub fn stirling2(k: usize, i: usize) -> Result<u64> {
    if i > k || k > STIRLING_CAP {
        return Err(HornError::OutOfRange(format!("stirling2({k}, {i}) needs 0 <= i <= k <= {STIRLING_CAP}")));
    }
    Ok(StirlingTable::new(STIRLING_CAP).get(k, i).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(stirling2(2, 1).unwrap(), 1);
        assert_eq!(stirling2(2, 2).unwrap(), 1);
        assert_eq!(stirling2(0, 0).unwrap(), 1);
        assert_eq!(stirling2(3, 2).unwrap(), 3);
        assert_eq!(stirling2(4, 2).unwrap(), 7);
        assert!(stirling2(5, 1).is_err());
        assert!(stirling2(2, 3).is_err());
    }

    #[test]
    fn recurrence_on_every_cell() {
        let t = StirlingTable::new(STIRLING_CAP);
        for k in 1..=t.max() {
            assert_eq!(t.get(k, 0), Some(0));
            for i in 1..=k {
                let above = t.get(k - 1, i).unwrap_or(0);
                assert_eq!(t.get(k, i).unwrap(), i as u64 * above + t.get(k - 1, i - 1).unwrap());
            }
        }
    }
}
