//! Generators, normal diwords, and the degree-lex weight ordering.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Index of a generator in its [`Alphabet`]. The index order is the well
/// order used everywhere.
pub type Gen = u32;

/// A finite well-ordered set of generators. Position in the list is the
/// order; names appear only at I/O boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// Names must be distinct, nonempty, and free of whitespace, `,` and `^`
    /// (those characters carry meaning in the text notations).
    pub fn new<I, S>(names: I) -> Result<Alphabet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::invalid("alphabet must not be empty"));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::invalid("generator names must be nonempty"));
            }
            if n.chars().any(|c| c.is_whitespace() || c == ',' || c == '^') {
                return Err(Error::invalid(format!(
                    "generator name `{n}` contains whitespace, `,` or `^`"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::invalid(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| i as Gen)
    }

    pub fn resolve(&self, name: &str) -> Result<Gen> {
        self.index_of(name)
            .ok_or_else(|| Error::invalid(format!("undeclared generator `{name}`")))
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        0..self.names.len() as Gen
    }
}

/// The two dialgebra products. `Vdash` is ⊢, which takes its center from the
/// right factor; `Dashv` is ⊣, which takes it from the left factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiOp {
    Vdash,
    Dashv,
}

impl DiOp {
    pub const BOTH: [DiOp; 2] = [DiOp::Vdash, DiOp::Dashv];

    pub fn symbol(self) -> &'static str {
        match self {
            DiOp::Vdash => "|-",
            DiOp::Dashv => "-|",
        }
    }
}

/// Where the centers of a polynomial's monomials sit: all at the last letter
/// (left normed), all at the first (right normed), both (every monomial has
/// length one), or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normedness {
    Left,
    Right,
    Both,
    Neither,
}

impl Normedness {
    pub fn is_left(self) -> bool {
        matches!(self, Normedness::Left | Normedness::Both)
    }

    pub fn is_right(self) -> bool {
        matches!(self, Normedness::Right | Normedness::Both)
    }

    pub(crate) fn from_flags(left: bool, right: bool) -> Normedness {
        match (left, right) {
            (true, true) => Normedness::Both,
            (true, false) => Normedness::Left,
            (false, true) => Normedness::Right,
            (false, false) => Normedness::Neither,
        }
    }
}

/// A normal diword: a nonempty word over the alphabet with one distinguished
/// center letter. With `m` letters before the center and `n` after it, this
/// is the canonical form of the product
/// `x_{-m} ⊢ … ⊢ x_{-1} ⊢ x_0 ⊣ x_1 ⊣ … ⊣ x_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalDiword {
    word: Vec<Gen>,
    center: usize,
}

impl NormalDiword {
    pub fn new(word: Vec<Gen>, center: usize) -> NormalDiword {
        assert!(!word.is_empty(), "diword must be nonempty");
        assert!(center < word.len(), "center out of range");
        NormalDiword { word, center }
    }

    pub fn single(g: Gen) -> NormalDiword {
        NormalDiword { word: vec![g], center: 0 }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of letters strictly left of the center (the `m` of the weight
    /// tuple).
    pub fn left_arm(&self) -> usize {
        self.center
    }

    /// Number of letters strictly right of the center.
    pub fn right_arm(&self) -> usize {
        self.word.len() - 1 - self.center
    }

    pub fn normedness(&self) -> Normedness {
        Normedness::from_flags(self.center == self.word.len() - 1, self.center == 0)
    }

    /// The dialgebra product of two normal diwords: the concatenated word
    /// with the center inherited from the right factor (⊢) or the left (⊣).
    pub fn product(&self, op: DiOp, rhs: &NormalDiword) -> NormalDiword {
        let mut word = Vec::with_capacity(self.word.len() + rhs.word.len());
        word.extend_from_slice(&self.word);
        word.extend_from_slice(&rhs.word);
        let center = match op {
            DiOp::Vdash => self.word.len() + rhs.center,
            DiOp::Dashv => self.center,
        };
        NormalDiword { word, center }
    }

    /// Parses the `a a ^b c` notation: letters separated by whitespace with
    /// exactly one letter carrying a `^` prefix.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<NormalDiword> {
        let mut word = Vec::new();
        let mut center = None;
        for tok in text.split_whitespace() {
            let (is_center, name) = match tok.strip_prefix('^') {
                Some(rest) => (true, rest),
                None => (false, tok),
            };
            if is_center {
                if center.is_some() {
                    return Err(Error::parse(format!("more than one `^` in `{text}`")));
                }
                center = Some(word.len());
            }
            word.push(alphabet.resolve(name)?);
        }
        if word.is_empty() {
            return Err(Error::parse("empty diword"));
        }
        match center {
            Some(c) => Ok(NormalDiword { word, center: c }),
            None => Err(Error::parse(format!("no `^` center marker in `{text}`"))),
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for (i, g) in self.word.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            if i == self.center {
                out.push('^');
            }
            out.push_str(alphabet.name(*g));
        }
        out
    }
}

impl fmt::Debug for NormalDiword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if i == self.center {
                write!(f, "^")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

impl Ord for NormalDiword {
    /// The weight ordering: compare total length, then the left-arm length
    /// `m`, then the letters left to right by alphabet position.
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.center.cmp(&other.center))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for NormalDiword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All normal diwords of length at most `max_deg` over `q` generators, in
/// ascending weight order. There are `n·qⁿ` diwords of each exact length `n`.
pub fn enumerate_diwords(q: usize, max_deg: usize) -> Vec<NormalDiword> {
    assert!(q > 0, "empty alphabet");
    let mut out = Vec::new();
    for len in 1..=max_deg {
        for center in 0..len {
            let mut word = vec![0 as Gen; len];
            'words: loop {
                out.push(NormalDiword { word: word.clone(), center });
                // Odometer with the least significant letter at the right,
                // so successive words ascend lexicographically.
                let mut i = len;
                while i > 0 {
                    i -= 1;
                    word[i] += 1;
                    if (word[i] as usize) < q {
                        continue 'words;
                    }
                    word[i] = 0;
                }
                break;
            }
        }
    }
    out
}
