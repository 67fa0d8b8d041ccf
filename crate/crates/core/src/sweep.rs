//! Half-and-half selection from a red/blue sequence with one color entirely
//! before the other.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::Color;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    RedFirst,
    BlueFirst,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSelection {
    pub reds: Vec<usize>,
    pub blues: Vec<usize>,
    pub winner: Winner,
}

impl SweepSelection {
    /// Every selected element of the winning color precedes every selected
    /// element of the other color, and both counts reach half (rounded up).
    pub fn holds_for(&self, seq: &[Color]) -> bool {
        let r = seq.iter().filter(|&&c| c == Color::Red).count();
        let b = seq.len() - r;
        let colors_ok = self.reds.iter().all(|&i| seq.get(i) == Some(&Color::Red))
            && self.blues.iter().all(|&i| seq.get(i) == Some(&Color::Blue));
        let (first, second) = match self.winner {
            Winner::RedFirst => (&self.reds, &self.blues),
            Winner::BlueFirst => (&self.blues, &self.reds),
        };
        let ordered = match (first.iter().max(), second.iter().min()) {
            (Some(x), Some(y)) => x < y,
            _ => false,
        };
        colors_ok && ordered && self.reds.len() >= r.div_ceil(2) && self.blues.len() >= b.div_ceil(2)
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::RedFirst => "RedFirst",
            Winner::BlueFirst => "BlueFirst",
        })
    }
}

/// Parses `R`/`B` letters (case-insensitive).
pub fn parse_colors(s: &str) -> Result<Vec<Color>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c.to_ascii_uppercase() {
            'R' => Ok(Color::Red),
            'B' => Ok(Color::Blue),
            other => Err(Error::InvalidArgument(format!("expected R or B, got {other:?}"))),
        })
        .collect()
}

pub struct ColorSeq(pub Vec<Color>);

impl FromStr for ColorSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_colors(s).map(ColorSeq)
    }
}

/// Halves first: the first `ceil(R/2)` reds with the last `ceil(B/2)` blues
/// when the last of those reds precedes the first of those blues, otherwise
/// the first blues with the last reds. The selection then grows to a cut:
/// among the cuts between the two halves, the one nearest the middle of the
/// sequence (lower on ties) keeps every winner element before it and every
/// other element after it.
pub fn sweep_select(seq: &[Color]) -> Result<SweepSelection> {
    let reds: Vec<usize> = (0..seq.len()).filter(|&i| seq[i] == Color::Red).collect();
    let blues: Vec<usize> = (0..seq.len()).filter(|&i| seq[i] == Color::Blue).collect();
    if reds.is_empty() || blues.is_empty() {
        return Err(Error::InvalidArgument("sweep needs at least one red and one blue".into()));
    }
    let (hr, hb) = (reds.len().div_ceil(2), blues.len().div_ceil(2));
    let (winner, last_first, first_second) = if reds[hr - 1] < blues[blues.len() - hb] {
        (Winner::RedFirst, reds[hr - 1], blues[blues.len() - hb])
    } else {
        (Winner::BlueFirst, blues[hb - 1], reds[reds.len() - hr])
    };
    // Cut positions c with last_first < c <= first_second.
    let mid = seq.len() / 2;
    let cut = mid.clamp(last_first + 1, first_second);
    let (before, after): (Vec<usize>, Vec<usize>) = (0..seq.len()).partition(|&i| i < cut);
    let first_color = if winner == Winner::RedFirst { Color::Red } else { Color::Blue };
    let pick = |v: &[usize], c: Color| v.iter().copied().filter(|&i| seq[i] == c).collect::<Vec<_>>();
    let first = pick(&before, first_color);
    let second = pick(&after, if first_color == Color::Red { Color::Blue } else { Color::Red });
    let sel = match winner {
        Winner::RedFirst => SweepSelection { reds: first, blues: second, winner },
        Winner::BlueFirst => SweepSelection { reds: second, blues: first, winner },
    };
    if !sel.holds_for(seq) {
        return Err(Error::Invariant(format!("sweep selection fails its ordering property: {sel:?}")));
    }
    Ok(sel)
}

/// All sequences of length `len` with both colors present.
pub fn all_two_colorings(len: usize) -> impl Iterator<Item = Vec<Color>> {
    (1u32..(1u32 << len) - 1).map(move |mask| {
        (0..len).map(|i| if mask >> i & 1 == 1 { Color::Blue } else { Color::Red }).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sel(s: &str) -> SweepSelection {
        sweep_select(&parse_colors(s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let s = sel("RBRB");
        assert_eq!((s.reds, s.blues, s.winner), (vec![0], vec![3], Winner::RedFirst));
        let s = sel("RRBB");
        assert_eq!((s.reds, s.blues, s.winner), (vec![0, 1], vec![2, 3], Winner::RedFirst));
        let s = sel("BRBRBR");
        assert_eq!((s.reds, s.blues, s.winner), (vec![3, 5], vec![0, 2], Winner::BlueFirst));
    }

    /// Brute force: some choice of half the reds and half the blues is
    /// ordered one way or the other.
    fn brute_exists(seq: &[Color]) -> bool {
        let r: Vec<usize> = (0..seq.len()).filter(|&i| seq[i] == Color::Red).collect();
        let b: Vec<usize> = (0..seq.len()).filter(|&i| seq[i] == Color::Blue).collect();
        let (hr, hb) = (r.len().div_ceil(2), b.len().div_ceil(2));
        (0..=seq.len()).any(|cut| {
            let red_before = r.iter().filter(|&&i| i < cut).count();
            let blue_after = b.iter().filter(|&&i| i >= cut).count();
            let blue_before = b.len() - blue_after;
            let red_after = r.len() - red_before;
            (red_before >= hr && blue_after >= hb) || (blue_before >= hb && red_after >= hr)
        })
    }

    #[test]
    fn agrees_with_brute_force() {
        for len in 2..=8 {
            for seq in all_two_colorings(len) {
                assert!(brute_exists(&seq));
                assert!(sweep_select(&seq).unwrap().holds_for(&seq));
            }
        }
    }

    #[test]
    fn single_color_rejected() {
        assert!(sweep_select(&parse_colors("RRR").unwrap()).is_err());
        assert!(parse_colors("RXB").is_err());
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(all_two_colorings(12).count(), 4094);
        assert_eq!((2..=12).map(|l| all_two_colorings(l).count()).sum::<usize>(), 8166);
    }
}
