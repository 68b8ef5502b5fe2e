//! The fibration data model and its text DSL.
//!
//! A fibration is `genus h; base disk|sphere; word = [...]` where each word
//! letter is a symmetric vanishing cycle encoded downstairs on the sphere
//! with `2h+2` marked points:
//!
//! * `aI` — the arc generator joining marked points `I, I+1` (`1 ≤ I ≤ 2h+1`);
//!   its lift is the standard nonseparating chain curve `c_I`.
//! * `sG` — the standard separating loop enclosing marked points `1..2G+1`
//!   (`1 ≤ G ≤ h-1`); its lift bounds a genus-`G` subsurface.
//! * `conj(cycle; braid)` — the image of `cycle` under the braid, written as
//!   half-twist letters `tI` (`tI'` for the inverse), applied left to right.
//!
//! Whitespace is insignificant and `#` starts a comment running to the end
//! of the line. The grammar:
//!
//! ```text
//! fibration ::= "genus" INT ";" "base" ("disk"|"sphere") ";"
//!               "word" "=" "[" [cycle ("," cycle)*] "]"
//! cycle     ::= "a" INT | "s" INT | "conj(" cycle ";" braid ")"
//! braid     ::= ("t" INT ["'"])+
//! ```

use crate::braid::{BraidWord, Letter};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// The base surface of the fibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseSurface {
    Disk,
    Sphere,
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::Disk => write!(f, "disk"),
            BaseSurface::Sphere => write!(f, "sphere"),
        }
    }
}

/// The standard curve a cycle is conjugated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleBase {
    /// `a_i`: equatorial arc between marked points `i` and `i+1`.
    ArcGenerator(usize),
    /// `s_g`: loop around marked points `1..=2g+1`.
    SeparatingLoop(usize),
}

/// A symmetric vanishing cycle: a standard generator transported by a braid.
///
/// The represented curve is the image of the base curve under the
/// conjugator, so it is symmetric by construction and the input fibration is
/// hyperelliptic automatically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricCycle {
    pub base: CycleBase,
    pub conjugator: BraidWord,
}

impl SymmetricCycle {
    pub fn arc(h: usize, i: usize) -> Self {
        SymmetricCycle { base: CycleBase::ArcGenerator(i), conjugator: BraidWord::identity(2 * h + 2) }
    }

    pub fn sep(h: usize, g: usize) -> Self {
        SymmetricCycle { base: CycleBase::SeparatingLoop(g), conjugator: BraidWord::identity(2 * h + 2) }
    }

    pub fn conjugated(base: CycleBase, conjugator: BraidWord) -> Self {
        SymmetricCycle { base, conjugator }
    }

    /// Conjugate the cycle's twist by the mapping class of `u`: the word
    /// `w σ w⁻¹` becomes `(u w) σ (u w)⁻¹`, so transporting every letter of
    /// a word by the same `u` conjugates the global monodromy and preserves
    /// certification.
    pub fn transported(&self, u: &BraidWord) -> Self {
        SymmetricCycle { base: self.base, conjugator: u.concat(&self.conjugator) }
    }

    pub fn is_separating(&self) -> bool {
        matches!(self.base, CycleBase::SeparatingLoop(_))
    }
}

/// Genus, base surface, and the ordered word of vanishing cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationSpec {
    pub genus: usize,
    pub base: BaseSurface,
    pub word: Vec<SymmetricCycle>,
}

impl FibrationSpec {
    pub fn new(genus: usize, base: BaseSurface, word: Vec<SymmetricCycle>) -> Self {
        assert!(genus >= 1, "genus must be at least 1");
        FibrationSpec { genus, base, word }
    }

    /// Number of marked points downstairs.
    pub fn marked_points(&self) -> usize {
        2 * self.genus + 2
    }

    /// Word length μ.
    pub fn mu(&self) -> usize {
        self.word.len()
    }

    pub fn count_separating(&self) -> usize {
        self.word.iter().filter(|c| c.is_separating()).count()
    }

    pub fn count_nonseparating(&self) -> usize {
        self.mu() - self.count_separating()
    }

    /// Transport every cycle by the same braid: conjugates the global
    /// monodromy, so certificates are unchanged.
    pub fn transported(&self, u: &BraidWord) -> FibrationSpec {
        FibrationSpec {
            genus: self.genus,
            base: self.base,
            word: self.word.iter().map(|c| c.transported(u)).collect(),
        }
    }

    /// Rewrite every separating genus to its canonical value
    /// `min(g, h-g)`; both values name the same separating curve class.
    pub fn canonicalized(&self) -> FibrationSpec {
        let h = self.genus;
        let word = self
            .word
            .iter()
            .map(|c| match c.base {
                CycleBase::SeparatingLoop(g) if g > h - g => {
                    SymmetricCycle { base: CycleBase::SeparatingLoop(h - g), conjugator: c.conjugator.clone() }
                }
                _ => c.clone(),
            })
            .collect();
        FibrationSpec { genus: h, base: self.base, word }
    }
}

/// One finding from [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Finding {
    ArcIndexOutOfRange { position: usize, index: usize, max: usize },
    SeparatingGenusOutOfRange { position: usize, genus: usize, max: usize },
    ConjugatorIndexOutOfRange { position: usize, index: usize, max: usize },
    ConjugatorStrandMismatch { position: usize, strands: usize, expected: usize },
    NonCanonicalSeparatingGenus { position: usize, stored: usize, canonical: usize },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::ArcIndexOutOfRange { position, index, max } => {
                write!(f, "cycle {position}: arc index {index} > {max}")
            }
            Finding::SeparatingGenusOutOfRange { position, genus, max } => {
                write!(f, "cycle {position}: separating genus {genus} outside 1..={max}")
            }
            Finding::ConjugatorIndexOutOfRange { position, index, max } => {
                write!(f, "cycle {position}: conjugator letter t{index} > t{max}")
            }
            Finding::ConjugatorStrandMismatch { position, strands, expected } => {
                write!(f, "cycle {position}: conjugator on {strands} strands, expected {expected}")
            }
            Finding::NonCanonicalSeparatingGenus { position, stored, canonical } => {
                write!(f, "cycle {position}: separating genus {stored} stored non-canonically, canonical form is {canonical}")
            }
        }
    }
}

/// Everything [`validate`] has to say about a spec.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    /// True iff the spec is structurally usable (canonicalization notes are
    /// fine, bound violations are not).
    pub fn is_sound(&self) -> bool {
        self.findings
            .iter()
            .all(|f| matches!(f, Finding::NonCanonicalSeparatingGenus { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            return write!(f, "ok");
        }
        for (k, v) in self.findings.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// List every violated bound; the report is empty iff all cycle invariants
/// hold and every separating genus is stored canonically.
pub fn validate(spec: &FibrationSpec) -> ValidationReport {
    let h = spec.genus;
    let n = 2 * h + 2;
    let mut findings = Vec::new();
    for (position, c) in spec.word.iter().enumerate() {
        match c.base {
            CycleBase::ArcGenerator(i) => {
                if i < 1 || i > 2 * h + 1 {
                    findings.push(Finding::ArcIndexOutOfRange { position, index: i, max: 2 * h + 1 });
                }
            }
            CycleBase::SeparatingLoop(g) => {
                if h < 2 || g < 1 || g > h - 1 {
                    findings.push(Finding::SeparatingGenusOutOfRange {
                        position,
                        genus: g,
                        max: h.saturating_sub(1),
                    });
                } else if g > h - g {
                    findings.push(Finding::NonCanonicalSeparatingGenus {
                        position,
                        stored: g,
                        canonical: h - g,
                    });
                }
            }
        }
        if c.conjugator.strands() != n {
            findings.push(Finding::ConjugatorStrandMismatch {
                position,
                strands: c.conjugator.strands(),
                expected: n,
            });
        } else {
            for l in c.conjugator.letters() {
                if l.index > 2 * h + 1 {
                    findings.push(Finding::ConjugatorIndexOutOfRange {
                        position,
                        index: l.index,
                        max: 2 * h + 1,
                    });
                }
            }
        }
    }
    ValidationReport { findings }
}

/// Handle counts and Euler characteristics of the standard handle build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleSummary {
    /// 1-handles of one fiber piece `Σ_h × D²`.
    pub one_handles_upstairs: usize,
    /// One 2-handle per vanishing cycle, each with relative framing -1.
    pub two_handles: usize,
    /// `χ` of the fibration over the disk.
    pub chi_m0: i64,
    /// `χ` of the closed-up fibration; only defined over the sphere.
    pub chi_m: Option<i64>,
}

/// Handle bookkeeping: `χ(M₀) = (2-2h) + μ` and, over the sphere,
/// `χ(M) = 2(2-2h) + μ`.
pub fn handle_summary(spec: &FibrationSpec) -> HandleSummary {
    let h = spec.genus as i64;
    let mu = spec.mu() as i64;
    HandleSummary {
        one_handles_upstairs: 2 * spec.genus,
        two_handles: spec.mu(),
        chi_m0: (2 - 2 * h) + mu,
        chi_m: match spec.base {
            BaseSurface::Sphere => Some(2 * (2 - 2 * h) + mu),
            BaseSurface::Disk => None,
        },
    }
}

/// A parse failure with its 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_token(&mut self) -> Result<Spanned, ParseError> {
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
        let (line, col) = (self.line, self.col);
        let Some(b) = self.peek() else {
            return Ok(Spanned { tok: Tok::Eof, line, col });
        };
        if b.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(c) = self.peek() {
                if c.is_ascii_alphabetic() {
                    s.push(c as char);
                    self.bump();
                } else {
                    break;
                }
            }
            return Ok(Spanned { tok: Tok::Ident(s), line, col });
        }
        if b.is_ascii_digit() {
            let mut v: usize = 0;
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((c - b'0') as usize))
                        .ok_or_else(|| ParseError { line, col, message: "integer too large".into() })?;
                    self.bump();
                } else {
                    break;
                }
            }
            return Ok(Spanned { tok: Tok::Int(v), line, col });
        }
        self.bump();
        Ok(Spanned { tok: Tok::Sym(b as char), line, col })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Option<Spanned>,
    genus: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { lexer: Lexer::new(src), lookahead: None, genus: 0 }
    }

    fn peek(&mut self) -> Result<Spanned, ParseError> {
        if self.lookahead.is_none() {
            self.lookahead = Some(self.lexer.next_token()?);
        }
        Ok(self.lookahead.clone().unwrap())
    }

    fn next(&mut self) -> Result<Spanned, ParseError> {
        let t = self.peek()?;
        self.lookahead = None;
        Ok(t)
    }

    fn fail<T>(&self, at: &Spanned, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: at.line, col: at.col, message: message.into() })
    }

    fn expect_ident(&mut self, word: &str) -> Result<(), ParseError> {
        let t = self.next()?;
        match &t.tok {
            Tok::Ident(s) if s == word => Ok(()),
            _ => self.fail(&t, format!("expected '{word}'")),
        }
    }

    fn expect_sym(&mut self, sym: char) -> Result<(), ParseError> {
        let t = self.next()?;
        match t.tok {
            Tok::Sym(c) if c == sym => Ok(()),
            _ => self.fail(&t, format!("expected '{sym}'")),
        }
    }

    fn expect_int(&mut self) -> Result<(usize, Spanned), ParseError> {
        let t = self.next()?;
        match t.tok {
            Tok::Int(v) => Ok((v, t)),
            _ => self.fail(&t, "expected an integer"),
        }
    }

    fn parse_fibration(&mut self) -> Result<FibrationSpec, ParseError> {
        self.expect_ident("genus")?;
        let (h, at) = self.expect_int()?;
        if h < 1 {
            return self.fail(&at, "genus must be at least 1");
        }
        self.genus = h;
        self.expect_sym(';')?;
        self.expect_ident("base")?;
        let t = self.next()?;
        let base = match &t.tok {
            Tok::Ident(s) if s == "disk" => BaseSurface::Disk,
            Tok::Ident(s) if s == "sphere" => BaseSurface::Sphere,
            _ => return self.fail(&t, "expected 'disk' or 'sphere'"),
        };
        self.expect_sym(';')?;
        self.expect_ident("word")?;
        self.expect_sym('=')?;
        self.expect_sym('[')?;
        let mut word = Vec::new();
        let t = self.peek()?;
        if t.tok == Tok::Sym(']') {
            self.next()?;
        } else {
            loop {
                word.push(self.parse_cycle()?);
                let t = self.next()?;
                match t.tok {
                    Tok::Sym(',') => continue,
                    Tok::Sym(']') => break,
                    _ => return self.fail(&t, "expected ',' or ']'"),
                }
            }
        }
        let t = self.next()?;
        if t.tok != Tok::Eof {
            return self.fail(&t, "unexpected trailing input");
        }
        Ok(FibrationSpec { genus: h, base, word })
    }

    /// A cycle, with nested `conj` flattened: the image of `conj(c; u)`
    /// under `v` is `conj(c; u v)`.
    fn parse_cycle(&mut self) -> Result<SymmetricCycle, ParseError> {
        let h = self.genus;
        let t = self.next()?;
        match &t.tok {
            Tok::Ident(s) if s == "a" => {
                let (i, at) = self.expect_int()?;
                if i < 1 || i > 2 * h + 1 {
                    return self.fail(&at, format!("arc index {i} out of range 1..={}", 2 * h + 1));
                }
                Ok(SymmetricCycle::arc(h, i))
            }
            Tok::Ident(s) if s == "s" => {
                let (g, at) = self.expect_int()?;
                if h < 2 || g < 1 || g > h - 1 {
                    return self.fail(
                        &at,
                        format!("separating genus {g} out of range 1..={}", h.saturating_sub(1)),
                    );
                }
                Ok(SymmetricCycle::sep(h, g))
            }
            Tok::Ident(s) if s == "conj" => {
                self.expect_sym('(')?;
                let inner = self.parse_cycle()?;
                self.expect_sym(';')?;
                let braid = self.parse_braid()?;
                self.expect_sym(')')?;
                Ok(SymmetricCycle {
                    base: inner.base,
                    conjugator: inner.conjugator.concat(&braid),
                })
            }
            _ => self.fail(&t, "expected a cycle: aI, sG or conj(...)"),
        }
    }

    fn parse_braid(&mut self) -> Result<BraidWord, ParseError> {
        let h = self.genus;
        let n = 2 * h + 2;
        let mut letters = Vec::new();
        loop {
            let t = self.peek()?;
            match &t.tok {
                Tok::Ident(s) if s == "t" => {
                    self.next()?;
                    let (i, at) = self.expect_int()?;
                    if i < 1 || i > 2 * h + 1 {
                        return self.fail(&at, format!("twist index {i} out of range 1..={}", 2 * h + 1));
                    }
                    let mut inverse = false;
                    if self.peek()?.tok == Tok::Sym('\'') {
                        self.next()?;
                        inverse = true;
                    }
                    letters.push(Letter { index: i, inverse });
                }
                _ => break,
            }
        }
        if letters.is_empty() {
            let t = self.peek()?;
            return self.fail(&t, "expected at least one twist letter tI");
        }
        Ok(BraidWord::new(n, letters))
    }
}

/// Parse DSL source into a spec. Total over the grammar; indices are bound
/// checked against the declared genus.
pub fn parse_fibration(text: &str) -> Result<FibrationSpec, ParseError> {
    Parser::new(text).parse_fibration()
}

fn print_cycle(c: &SymmetricCycle, out: &mut String) {
    let base = match c.base {
        CycleBase::ArcGenerator(i) => format!("a{i}"),
        CycleBase::SeparatingLoop(g) => format!("s{g}"),
    };
    if c.conjugator.is_empty() {
        out.push_str(&base);
    } else {
        out.push_str("conj(");
        out.push_str(&base);
        out.push_str("; ");
        let mut first = true;
        for l in c.conjugator.letters() {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&format!("{l}"));
        }
        out.push(')');
    }
}

/// Canonical text form; `parse_fibration(print_fibration(spec)) == spec`.
pub fn print_fibration(spec: &FibrationSpec) -> String {
    let mut out = String::new();
    out.push_str(&format!("genus {}; base {}; word = [", spec.genus, spec.base));
    for (k, c) in spec.word.iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        print_cycle(c, &mut out);
    }
    out.push_str("]\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_empty_word() {
        let spec = parse_fibration("genus 2; base sphere; word = []").unwrap();
        assert_eq!(spec.genus, 2);
        assert_eq!(spec.base, BaseSurface::Sphere);
        assert_eq!(spec.mu(), 0);
    }

    #[test]
    fn parses_single_separating_loop() {
        let spec = parse_fibration("genus 2; base disk; word = [s1]").unwrap();
        assert_eq!(spec.word, vec![SymmetricCycle::sep(2, 1)]);
    }

    #[test]
    fn parses_conjugated_cycle_and_round_trips() {
        let src = "genus 2; base sphere; word = [a1, conj(a2; t1), s1]";
        let spec = parse_fibration(src).unwrap();
        assert_eq!(spec.mu(), 3);
        assert_eq!(spec.word[1].base, CycleBase::ArcGenerator(2));
        assert_eq!(spec.word[1].conjugator, BraidWord::from_signed(6, &[1]));
        let printed = print_fibration(&spec);
        assert_eq!(parse_fibration(&printed).unwrap(), spec);
    }

    #[test]
    fn round_trip_with_inverses_and_nesting() {
        let src = "genus 3; base disk; word = [conj(conj(a1; t2); t3' t1), s2, a7]";
        let spec = parse_fibration(src).unwrap();
        // nested conj flattens to u then v
        assert_eq!(spec.word[0].conjugator, BraidWord::from_signed(8, &[2, -3, 1]));
        let printed = print_fibration(&spec);
        assert_eq!(parse_fibration(&printed).unwrap(), spec);
    }

    #[test]
    fn comments_and_whitespace_are_ignored() {
        let src = "# a fibration\n genus 2 ;\n base sphere ; # over S^2\n word=[ a1 ,a2 ]\n";
        let spec = parse_fibration(src).unwrap();
        assert_eq!(spec.mu(), 2);
    }

    #[test]
    fn rejects_out_of_range_arc_with_position() {
        let err = parse_fibration("genus 2; base disk; word = [a6]").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn rejects_syntax_error_with_position() {
        let err = parse_fibration("genus 2; base disk; word = [a1 a2]").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.col, 32);
    }

    #[test]
    fn validate_flags_out_of_range_arc() {
        let mut spec = parse_fibration("genus 2; base disk; word = [a1]").unwrap();
        spec.word[0].base = CycleBase::ArcGenerator(6);
        let report = validate(&spec);
        assert_eq!(report.findings.len(), 1);
        assert!(!report.is_sound());
        assert!(format!("{report}").contains("arc index 6 > 5"));
    }

    #[test]
    fn validate_accepts_standard_loop() {
        let spec = parse_fibration("genus 2; base disk; word = [s1]").unwrap();
        assert!(validate(&spec).is_clean());
    }

    #[test]
    fn validate_notes_canonicalization() {
        let spec = parse_fibration("genus 3; base disk; word = [s2]").unwrap();
        let report = validate(&spec);
        assert_eq!(
            report.findings,
            vec![Finding::NonCanonicalSeparatingGenus { position: 0, stored: 2, canonical: 1 }]
        );
        assert!(report.is_sound());
        let fixed = spec.canonicalized();
        assert_eq!(fixed.word[0].base, CycleBase::SeparatingLoop(1));
        // Idempotent: the fixed spec reports nothing.
        assert!(validate(&fixed).is_clean());
        assert_eq!(fixed.canonicalized(), fixed);
    }

    #[test]
    fn handle_summary_examples() {
        let spec = parse_fibration("genus 2; base sphere; word = [a1, a2, a3, a4, a5, a5, a4, a3]").unwrap();
        let s = handle_summary(&spec);
        assert_eq!(s.chi_m, Some(4));
        assert_eq!(s.chi_m0, 6);
        assert_eq!(s.one_handles_upstairs, 4);

        // Empty word over the sphere: the trivial bundle, χ = 4 - 4h.
        for h in 1..=4 {
            let spec = FibrationSpec::new(h, BaseSurface::Sphere, vec![]);
            assert_eq!(handle_summary(&spec).chi_m, Some(4 - 4 * h as i64));
        }

        // Handle-count oracle at h=2, μ=20: χ = (2-2h) + μ + (2-2h).
        let w: Vec<SymmetricCycle> = (0..20).map(|k| SymmetricCycle::arc(2, 1 + k % 5)).collect();
        let spec = FibrationSpec::new(2, BaseSurface::Sphere, w);
        let expect = (2 - 4) + 20 + (2 - 4);
        assert_eq!(handle_summary(&spec).chi_m, Some(expect));
        assert_eq!(expect, 16);
    }

    #[test]
    fn chi_relation_between_m_and_m0() {
        for mu in [0usize, 3, 8, 20] {
            for h in 1..=3 {
                let w: Vec<SymmetricCycle> = (0..mu).map(|k| SymmetricCycle::arc(h, 1 + k % (2 * h + 1))).collect();
                let spec = FibrationSpec::new(h, BaseSurface::Sphere, w);
                let s = handle_summary(&spec);
                assert_eq!(s.chi_m.unwrap(), s.chi_m0 + (2 - 2 * h as i64));
            }
        }
    }
}
