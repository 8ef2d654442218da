use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Fixed-length bit string. Positions are 1-based in the accessors; the
/// string form writes position 1 first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryLabel {
    bits: Vec<bool>,
}

impl BinaryLabel {
    pub fn zeros(n: usize) -> BinaryLabel {
        BinaryLabel { bits: vec![false; n] }
    }

    pub fn from_bits(bits: Vec<bool>) -> BinaryLabel {
        BinaryLabel { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Digit at 1-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i - 1] = value;
    }

    pub fn with_appended(&self, bit: bool) -> BinaryLabel {
        let mut bits = self.bits.clone();
        bits.push(bit);
        BinaryLabel { bits }
    }

    /// Removes the digit at 1-based position `i`.
    pub fn without(&self, i: usize) -> BinaryLabel {
        let mut bits = self.bits.clone();
        bits.remove(i - 1);
        BinaryLabel { bits }
    }

    pub fn concat(&self, other: &BinaryLabel) -> BinaryLabel {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BinaryLabel { bits }
    }

    pub fn complement(&self) -> BinaryLabel {
        BinaryLabel {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn xor(&self, other: &BinaryLabel) -> BinaryLabel {
        BinaryLabel {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// Coordinatewise order.
    pub fn le(&self, other: &BinaryLabel) -> bool {
        self.len() == other.len() && self.bits.iter().zip(&other.bits).all(|(a, b)| !a || *b)
    }

    pub fn hamming(&self, other: &BinaryLabel) -> usize {
        self.bits.iter().zip(&other.bits).filter(|(a, b)| a != b).count()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i + 1)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    /// Positions (1-based) where the two labels differ.
    pub fn diff_positions(&self, other: &BinaryLabel) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.get(i) != other.get(i)).collect()
    }
}

impl fmt::Display for BinaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<BinaryLabel> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidInput(format!("not a binary string: {s:?}"))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(BinaryLabel::from_bits)
    }
}

impl Serialize for BinaryLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Attachment map: `alpha[&i]` for `2 <= i <= n` is the earlier face that
/// face `i` is glued to.
pub type Alpha = BTreeMap<usize, usize>;

fn check_alpha(alpha: &Alpha, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadAlpha("need at least one face".into()));
    }
    for i in 2..=n {
        match alpha.get(&i) {
            Some(&a) if a >= 1 && a < i => {}
            Some(&a) => return Err(Error::BadAlpha(format!("alpha({i}) = {a} is not in 1..{i}"))),
            None => return Err(Error::BadAlpha(format!("alpha({i}) missing"))),
        }
    }
    if let Some((&i, _)) = alpha.iter().find(|(&i, _)| i < 2 || i > n) {
        return Err(Error::BadAlpha(format!("alpha({i}) given for a face outside 2..{n}")));
    }
    Ok(())
}

/// `L_1, ..., L_n`: start from `{0, 1}`; `L_{i+1}` appends 0 to every
/// string of `L_i` and 1 to those with a 0 at position `alpha(i+1)`.
pub fn label_set_trace(alpha: &Alpha, n: usize) -> Result<Vec<BTreeSet<BinaryLabel>>> {
    check_alpha(alpha, n)?;
    let mut levels = Vec::with_capacity(n);
    let mut cur: BTreeSet<BinaryLabel> = ["0", "1"].iter().map(|s| s.parse().unwrap()).collect();
    levels.push(cur.clone());
    for i in 1..n {
        let a = alpha[&(i + 1)];
        let mut next = BTreeSet::new();
        for x in &cur {
            next.insert(x.with_appended(false));
            if !x.get(a) {
                next.insert(x.with_appended(true));
            }
        }
        cur = next;
        levels.push(cur.clone());
    }
    Ok(levels)
}

pub fn label_set_from_alpha(alpha: &Alpha, n: usize) -> Result<BTreeSet<BinaryLabel>> {
    Ok(label_set_trace(alpha, n)?.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn branched5_alpha() -> Alpha {
        Alpha::from([(2, 1), (3, 2), (4, 3), (5, 2)])
    }

    #[test]
    fn branched5_trace() {
        let levels = label_set_trace(&branched5_alpha(), 5).unwrap();
        let sizes: Vec<usize> = levels.iter().map(BTreeSet::len).collect();
        assert_eq!(sizes, vec![2, 3, 5, 8, 14]);
        let want: BTreeSet<BinaryLabel> = [
            "00000", "10000", "01000", "00100", "10100", "00010", "10010", "01010", "00001", "10001", "00101",
            "10101", "00011", "10011",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        assert_eq!(levels[4], want);
    }

    #[test]
    fn small_cases() {
        let l2 = label_set_from_alpha(&Alpha::from([(2, 1)]), 2).unwrap();
        let s: Vec<String> = l2.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["00", "01", "10"]);
        assert_eq!(label_set_from_alpha(&Alpha::new(), 1).unwrap().len(), 2);
    }

    #[test]
    fn bad_alpha() {
        assert!(matches!(label_set_from_alpha(&Alpha::from([(2, 2)]), 2), Err(Error::BadAlpha(_))));
        assert!(matches!(label_set_from_alpha(&Alpha::new(), 2), Err(Error::BadAlpha(_))));
        assert!(matches!(label_set_from_alpha(&Alpha::new(), 0), Err(Error::BadAlpha(_))));
        assert!(matches!(
            label_set_from_alpha(&Alpha::from([(2, 1), (7, 1)]), 2),
            Err(Error::BadAlpha(_))
        ));
    }

    #[test]
    fn label_ops() {
        let x: BinaryLabel = "10110".parse().unwrap();
        assert!(x.get(1) && !x.get(2));
        assert_eq!(x.without(1).to_string(), "0110");
        assert_eq!(x.complement().to_string(), "01001");
        assert!("10010".parse::<BinaryLabel>().unwrap().le(&x));
        assert!(!x.le(&"10010".parse().unwrap()));
        assert_eq!(x.hamming(&"00111".parse().unwrap()), 2);
        assert_eq!(x.ones().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert!("012".parse::<BinaryLabel>().is_err());
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"10110\"");
    }
}
