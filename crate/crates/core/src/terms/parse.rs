use super::{is_var_name, Constant, Signature, Term, TermError};

/// Parses a term.
///
/// Accepts the canonical printed form (`(a + b)`, `-a`, `f(a, b)`, `x1`,
/// `#3`, `c`, `0`) and, as a convenience, unparenthesized sums and
/// differences `a + b - c`, which associate to the left.
pub fn parse_term(text: &str, sig: &Signature, var_count: u32) -> Result<Term, TermError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let t = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    t.check(sig, var_count)?;
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> TermError {
        TermError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), TermError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn sum(&mut self) -> Result<Term, TermError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = Term::sum(acc, rhs);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = Term::sum(acc, Term::neg(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Term, TermError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Term::neg(self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<u32, TermError> {
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            self.pos = start;
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(d)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(TermError::Syntax {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let t = self.sum()?;
                self.expect(b')')?;
                Ok(t)
            }
            Some(b'#') => {
                self.pos += 1;
                Ok(Term::Const(Constant::Element(self.number()?)))
            }
            Some(b'0') => {
                let start = self.pos;
                let n = self.number()?;
                if n != 0 || self.pos - start != 1 {
                    self.pos = start;
                    return Err(self.err("bare integers other than 0 are not terms; use #k"));
                }
                Ok(Term::Zero)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos])
                    .expect("ascii")
                    .to_string();
                if self.peek() == Some(b'(') {
                    self.pos += 1;
                    let mut args = vec![self.sum()?];
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        args.push(self.sum()?);
                    }
                    self.expect(b')')?;
                    return Ok(Term::App(name, args));
                }
                if is_var_name(&name) {
                    let index = name[1..].parse().map_err(|_| TermError::Syntax {
                        pos: start,
                        msg: "variable index out of range".into(),
                    })?;
                    return Ok(Term::Var(index));
                }
                Ok(Term::Const(Constant::Named(name)))
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }
}
