//! Expressions over the symmetrized semiring.
//!
//! Grammar (⊙ binds tighter than ⊕ and ◁, which associate to the left):
//!
//! ```text
//! expr   := term (("(+)" | "(<|)") term)*
//! term   := factor ("(*)" factor)*
//! factor := value | "(" expr ")" | ("-" | "+" | "b") "(" expr ")"
//! value  := "o" | ("+" | "-" | "b") magnitude
//! ```
//!
//! A magnitude is a rational literal, optionally in parentheses, so
//! `-(-1)` is ⊖(−1).  A sign in front of a parenthesised expression negates
//! (`-`), keeps (`+`) or balances (`b`) its value.

use signtrop::{Error, Result, SymNum};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Plus,
    Times,
    LeftSum,
    Open,
    Close,
    /// A sign character directly followed by `(`.
    Prefix(char),
    Value(SymNum),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let starts = |i: usize, pat: &str| chars[i..].iter().take(pat.chars().count()).copied().eq(pat.chars());
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if starts(i, "(+)") {
            out.push(Token::Plus);
            i += 3;
        } else if starts(i, "(*)") {
            out.push(Token::Times);
            i += 3;
        } else if starts(i, "(<|)") {
            out.push(Token::LeftSum);
            i += 4;
        } else if c == '(' {
            out.push(Token::Open);
            i += 1;
        } else if c == ')' {
            out.push(Token::Close);
            i += 1;
        } else if c == 'o' || c == '𝟘' {
            out.push(Token::Value(SymNum::zero()));
            i += 1;
        } else if matches!(c, '+' | '-' | 'b' | '⊕' | '⊖' | '•') {
            if chars.get(i + 1) == Some(&'(') {
                // `-(q)` with a plain rational inside is a literal, otherwise
                // the sign applies to a subexpression.
                let close = chars[i + 2..].iter().position(|&c| c == ')').map(|p| p + i + 2);
                let literal = close.and_then(|j| {
                    let text: String = chars[i..=j].iter().collect();
                    text.parse::<SymNum>().ok().map(|v| (v, j))
                });
                match literal {
                    Some((v, j)) => {
                        out.push(Token::Value(v));
                        i = j + 1;
                    }
                    None => {
                        out.push(Token::Prefix(c));
                        i += 1;
                    }
                }
            } else {
                let end = (i + 1..chars.len())
                    .find(|&j| !(chars[j].is_ascii_digit() || matches!(chars[j], '/' | '.' | '-' | '+')))
                    .unwrap_or(chars.len());
                let text: String = chars[i..end].iter().collect();
                out.push(Token::Value(text.parse()?));
                i = end;
            }
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in expression {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<SymNum> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Token::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Token::LeftSum => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = if acc.is_zero() { rhs } else { acc };
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SymNum> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Times) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn group(&mut self) -> Result<SymNum> {
        let v = self.expr()?;
        match self.next() {
            Some(Token::Close) => Ok(v),
            _ => Err(Error::Parse("missing closing parenthesis".to_string())),
        }
    }

    fn factor(&mut self) -> Result<SymNum> {
        match self.next() {
            Some(Token::Value(v)) => Ok(v),
            Some(Token::Open) => self.group(),
            Some(Token::Prefix(c)) => {
                if self.next() != Some(Token::Open) {
                    return Err(Error::Parse("expected `(` after a sign prefix".to_string()));
                }
                let v = self.group()?;
                Ok(match c {
                    '-' | '⊖' => v.negate(),
                    'b' | '•' => v.balance(),
                    _ => v,
                })
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of expression".to_string())),
        }
    }
}

/// Evaluates an expression exactly.
pub fn eval(s: &str) -> Result<SymNum> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".to_string()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in expression {s:?}")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> String {
        eval(s).unwrap().to_string()
    }

    #[test]
    fn worked_arithmetic() {
        assert_eq!(ev("(+0 (+) -0) (*) -(-1)"), "b-1");
        assert_eq!(ev("+2 (*) -1"), "-3");
        assert_eq!(ev("-1 (*) -1"), "+2");
        assert_eq!(ev("+2 (+) -3"), "-3");
    }

    #[test]
    fn precedence_and_prefixes() {
        assert_eq!(ev("+1 (+) +2 (*) +3"), "+5");
        assert_eq!(ev("-(+1 (+) +2)"), "-2");
        assert_eq!(ev("b(+4)"), "b4");
        assert!(eval("o (<| ) +1").is_err());
    }

    #[test]
    fn left_sum_and_errors() {
        assert_eq!(ev("o (<|) -2 (<|) +5"), "-2");
        assert!(eval("").is_err());
        assert!(eval("(+1").is_err());
        assert!(eval("+1 +2").is_err());
        assert!(eval("x").is_err());
    }
}
