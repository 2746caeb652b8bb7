//! Word expressions such as `2 u{1,2}t{3} - u{4}t{1,2}` or `Gamma`.

use mackit::{MacError, Result, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// A word; every letter is optional, `1` is the empty word.
    Word {
        u: VertexSet,
        t: Option<VertexSet>,
        e: Option<VertexSet>,
        v: Option<VertexSet>,
    },
    Gamma,
}

impl Atom {
    fn one() -> Self {
        Atom::Word {
            u: VertexSet::EMPTY,
            t: None,
            e: None,
            v: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(i64, Atom)>,
}

impl Expr {
    pub fn mentions(&self, letter: char) -> bool {
        self.terms.iter().any(|(_, a)| match a {
            Atom::Word { t, e, v, .. } => match letter {
                't' => t.is_some(),
                'e' => e.is_some(),
                'v' => v.is_some(),
                _ => false,
            },
            Atom::Gamma => letter == 'G',
        })
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> MacError {
    MacError::parse(1, format!("column {}: {}", pos + 1, msg.into()))
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| err(start, format!("bad integer {text:?}")))
    }

    fn labels(&mut self) -> Result<VertexSet> {
        if self.peek() != Some(b'{') {
            return Err(err(self.pos, "expected `{`"));
        }
        self.pos += 1;
        let mut s = VertexSet::EMPTY;
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(s);
        }
        loop {
            let at = self.pos;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(err(at, "expected a label"));
            }
            let l = self.number()? as usize;
            if l == 0 || l > mackit::vertex_set::MAX_LABEL {
                return Err(err(at, format!("label {l} out of range")));
            }
            if s.contains(l) {
                return Err(err(at, format!("label {l} repeated")));
            }
            s = s.insert(l);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(s);
                }
                _ => return Err(err(self.pos, "expected `,` or `}`")),
            }
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.src[self.pos..].starts_with(b"Gamma") {
            self.pos += 5;
            return Ok(Atom::Gamma);
        }
        let (mut u, mut t, mut e, mut v) = (None, None, None, None);
        while let Some(c @ (b'u' | b't' | b'e' | b'v')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let s = self.labels()?;
            let slot = match c {
                b'u' => &mut u,
                b't' => &mut t,
                b'e' => &mut e,
                _ => &mut v,
            };
            if slot.replace(s).is_some() {
                return Err(err(at, format!("letter `{}` used twice in one word", c as char)));
            }
        }
        if u.is_none() && t.is_none() && e.is_none() && v.is_none() {
            return Err(err(self.pos, "expected a word or `Gamma`"));
        }
        let u = u.unwrap_or(VertexSet::EMPTY);
        for other in [t, e, v].into_iter().flatten() {
            if !u.is_disjoint(other) {
                return Err(err(self.pos, "letters of one word must use disjoint labels"));
            }
        }
        if let (Some(a), Some(b)) = (t.or(e), v) {
            if !a.is_disjoint(b) {
                return Err(err(self.pos, "letters of one word must use disjoint labels"));
            }
        }
        Ok(Atom::Word { u, t, e, v })
    }

    fn term(&mut self) -> Result<(i64, Atom)> {
        let mut coeff = 1i64;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let at = self.pos;
            coeff = i64::try_from(self.number()?).map_err(|_| err(at, "coefficient too large"))?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
            match self.peek() {
                None | Some(b'+' | b'-') => return Ok((coeff, Atom::one())),
                _ => {}
            }
        }
        Ok((coeff, self.atom()?))
    }
}

/// Parses a signed sum of terms, each an optional integer coefficient
/// followed by a word (`u{..}t{..}`, `u{..}e{..}`, `v{..}u{..}`) or `Gamma`.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negative = false;
    if lx.peek() == Some(b'-') {
        negative = true;
        lx.pos += 1;
    } else if lx.peek() == Some(b'+') {
        lx.pos += 1;
    }
    loop {
        let (c, a) = lx.term()?;
        terms.push((if negative { -c } else { c }, a));
        match lx.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(err(lx.pos, "expected `+`, `-` or the end")),
        }
        lx.pos += 1;
    }
    Ok(Expr { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(l: &[usize]) -> VertexSet {
        VertexSet::of(l)
    }

    #[test]
    fn words_and_signs() {
        let e = parse_expr("u{1,2}t{3} - 2*u{4} t{1} + 3").unwrap();
        assert_eq!(e.terms.len(), 3);
        assert_eq!(
            e.terms[0],
            (
                1,
                Atom::Word {
                    u: vs(&[1, 2]),
                    t: Some(vs(&[3])),
                    e: None,
                    v: None
                }
            )
        );
        assert_eq!(e.terms[1].0, -2);
        assert_eq!(e.terms[2], (3, Atom::one()));
    }

    #[test]
    fn gamma_and_algebra_words() {
        let e = parse_expr("-Gamma").unwrap();
        assert_eq!(e.terms, vec![(-1, Atom::Gamma)]);
        let e = parse_expr("v{1}u{6}").unwrap();
        assert!(e.mentions('v'));
        assert!(!e.mentions('t'));
    }

    #[test]
    fn errors_carry_columns() {
        for bad in ["u{1,2", "u{1}u{2}", "u{1}t{1}", "x{1}", "u{1} t{2} 3", "u{0}", "", "u{1,,2}"] {
            let e = parse_expr(bad).unwrap_err();
            assert!(matches!(e, MacError::Parse { .. }), "{bad}: {e}");
        }
    }
}
