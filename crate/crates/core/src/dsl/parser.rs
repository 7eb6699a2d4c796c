//! Lexer and recursive-descent parser for conjecture text.
//!
//! ```text
//! conjecture := "forall" binder ("," binder)* ":" formula
//! binder     := IDENT ":" SORT
//! formula    := conj ("|" conj)*
//! conj       := unary ("&" unary)*
//! unary      := "!" unary | "(" formula ")" | atom
//! atom       := term ("<=" | "=") term
//! term       := meet ("&cup" meet)*
//! meet       := prod ("&cap" prod)*
//! prod       := primary ("*" primary)*
//! primary    := IDENT | "H" | ("R" | "L" | "I") "(" term ")" | "(" term ")"
//! ```

use std::collections::HashSet;

use super::ast::{Binder, Conjecture, Formula, Relation, Term};
use super::DslError;
use crate::ideal::IdealClass;

const RESERVED: [&str; 5] = ["H", "R", "L", "I", "forall"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Comma,
    Star,
    Cap,
    Cup,
    Amp,
    Pipe,
    Bang,
    Le,
    Eq,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Star => "`*`".into(),
            Tok::Cap => "`&cap`".into(),
            Tok::Cup => "`&cup`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Eq => "`=`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        let mut push = |tok: Tok, len: usize, i: &mut usize, column: &mut usize| {
            tokens.push(Token {
                tok,
                line: start_line,
                column: start_col,
            });
            *i += len;
            *column += len;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                column += 1;
            }
            ':' => push(Tok::Colon, 1, &mut i, &mut column),
            ',' => push(Tok::Comma, 1, &mut i, &mut column),
            '*' => push(Tok::Star, 1, &mut i, &mut column),
            '|' => push(Tok::Pipe, 1, &mut i, &mut column),
            '!' => push(Tok::Bang, 1, &mut i, &mut column),
            '=' => push(Tok::Eq, 1, &mut i, &mut column),
            '(' => push(Tok::LParen, 1, &mut i, &mut column),
            ')' => push(Tok::RParen, 1, &mut i, &mut column),
            '<' if chars.get(i + 1) == Some(&'=') => push(Tok::Le, 2, &mut i, &mut column),
            '&' => {
                let word_end = (i + 1..chars.len())
                    .find(|&j| !is_ident_char(chars[j]))
                    .unwrap_or(chars.len());
                let word: String = chars[i + 1..word_end].iter().collect();
                match word.as_str() {
                    "cap" => push(Tok::Cap, 4, &mut i, &mut column),
                    "cup" => push(Tok::Cup, 4, &mut i, &mut column),
                    _ => push(Tok::Amp, 1, &mut i, &mut column),
                }
            }
            c if is_ident_start(c) => {
                let end = (i..chars.len())
                    .find(|&j| !is_ident_char(chars[j]))
                    .unwrap_or(chars.len());
                let word: String = chars[i..end].iter().collect();
                push(Tok::Ident(word), end - i, &mut i, &mut column);
            }
            other => {
                return Err(DslError::Syntax {
                    line,
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    tokens.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(tokens)
}

/// Variable occurrences with their tokens, for unbound-name errors.
type Uses = Vec<(String, Token)>;

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(token: &Token, message: String) -> DslError {
        DslError::Syntax {
            line: token.line,
            column: token.column,
            message,
        }
    }

    fn expected(&self, what: &str) -> DslError {
        let t = self.peek();
        Self::error_at(t, format!("expected {what}, found {}", t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<Token, DslError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.expected(&tok.describe()))
        }
    }

    fn conjecture(&mut self) -> Result<(Conjecture, Uses), DslError> {
        match &self.peek().tok {
            Tok::Ident(w) if w == "forall" => {
                self.bump();
            }
            _ => return Err(self.expected("`forall`")),
        }
        let mut binders = Vec::new();
        loop {
            let name_tok = self.bump();
            let name = match &name_tok.tok {
                Tok::Ident(n) if RESERVED.contains(&n.as_str()) => {
                    return Err(DslError::Sort {
                        line: name_tok.line,
                        column: name_tok.column,
                        message: format!("`{n}` is reserved and cannot be bound"),
                    })
                }
                Tok::Ident(n) => n.clone(),
                other => {
                    return Err(Self::error_at(
                        &name_tok,
                        format!("expected a variable name, found {}", other.describe()),
                    ))
                }
            };
            self.expect(Tok::Colon)?;
            let sort_tok = self.bump();
            let sort = match &sort_tok.tok {
                Tok::Ident(s) => s.parse::<IdealClass>().map_err(|m| DslError::Sort {
                    line: sort_tok.line,
                    column: sort_tok.column,
                    message: m,
                })?,
                other => {
                    return Err(Self::error_at(
                        &sort_tok,
                        format!("expected a sort, found {}", other.describe()),
                    ))
                }
            };
            binders.push((Binder { name, sort }, name_tok));
            if self.peek().tok == Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(Tok::Colon)?;
        let mut uses = Vec::new();
        let body = self.formula(&mut uses)?;
        if self.peek().tok != Tok::Eof {
            return Err(self.expected("end of input"));
        }

        let mut seen = HashSet::new();
        for (b, tok) in &binders {
            if !seen.insert(b.name.clone()) {
                return Err(DslError::Sort {
                    line: tok.line,
                    column: tok.column,
                    message: format!("variable `{}` is bound twice", b.name),
                });
            }
        }
        Ok((
            Conjecture {
                binders: binders.into_iter().map(|(b, _)| b).collect(),
                body,
            },
            uses,
        ))
    }

    fn formula(&mut self, uses: &mut Uses) -> Result<Formula, DslError> {
        let mut lhs = self.conjunction(uses)?;
        while self.peek().tok == Tok::Pipe {
            self.bump();
            let rhs = self.conjunction(uses)?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self, uses: &mut Uses) -> Result<Formula, DslError> {
        let mut lhs = self.unary(uses)?;
        while self.peek().tok == Tok::Amp {
            self.bump();
            let rhs = self.unary(uses)?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self, uses: &mut Uses) -> Result<Formula, DslError> {
        match self.peek().tok {
            Tok::Bang => {
                self.bump();
                Ok(Formula::Not(Box::new(self.unary(uses)?)))
            }
            Tok::LParen => {
                // Either a parenthesized formula or an atom whose left term
                // starts with a parenthesis; try the atom first.
                let start = self.pos;
                let mark = uses.len();
                let atom_err = match self.atom(uses) {
                    Ok(f) => return Ok(f),
                    Err(e) => (self.pos, e),
                };
                self.pos = start;
                uses.truncate(mark);
                self.bump();
                let grouped = self
                    .formula(uses)
                    .and_then(|f| self.expect(Tok::RParen).map(|_| f));
                match grouped {
                    Ok(f) => Ok(f),
                    Err(e) if self.pos >= atom_err.0 => Err(e),
                    Err(_) => Err(atom_err.1),
                }
            }
            _ => self.atom(uses),
        }
    }

    fn atom(&mut self, uses: &mut Uses) -> Result<Formula, DslError> {
        let lhs = self.term(uses)?;
        let relation = match self.peek().tok {
            Tok::Le => Relation::Subset,
            Tok::Eq => Relation::Equal,
            _ => return Err(self.expected("`<=` or `=`")),
        };
        self.bump();
        let rhs = self.term(uses)?;
        Ok(Formula::Atom { lhs, relation, rhs })
    }

    fn starts_term(tok: &Tok) -> bool {
        matches!(tok, Tok::Ident(_) | Tok::LParen)
    }

    /// Operand after a binary operator; a missing operand is reported at the operator.
    fn operand(
        &mut self,
        op: &Token,
        next: fn(&mut Self, &mut Uses) -> Result<Term, DslError>,
        uses: &mut Uses,
    ) -> Result<Term, DslError> {
        if !Self::starts_term(&self.peek().tok) {
            return Err(Self::error_at(
                op,
                format!(
                    "dangling {}: expected a term, found {}",
                    op.tok.describe(),
                    self.peek().tok.describe()
                ),
            ));
        }
        next(self, uses)
    }

    fn term(&mut self, uses: &mut Uses) -> Result<Term, DslError> {
        let mut lhs = self.meet(uses)?;
        while self.peek().tok == Tok::Cup {
            let op = self.bump();
            let rhs = self.operand(&op, Self::meet, uses)?;
            lhs = Term::union(lhs, rhs);
        }
        Ok(lhs)
    }

    fn meet(&mut self, uses: &mut Uses) -> Result<Term, DslError> {
        let mut lhs = self.product(uses)?;
        while self.peek().tok == Tok::Cap {
            let op = self.bump();
            let rhs = self.operand(&op, Self::product, uses)?;
            lhs = Term::intersection(lhs, rhs);
        }
        Ok(lhs)
    }

    fn product(&mut self, uses: &mut Uses) -> Result<Term, DslError> {
        let mut lhs = self.primary(uses)?;
        while self.peek().tok == Tok::Star {
            let op = self.bump();
            let rhs = self.operand(&op, Self::primary, uses)?;
            lhs = Term::product(lhs, rhs);
        }
        Ok(lhs)
    }

    fn primary(&mut self, uses: &mut Uses) -> Result<Term, DslError> {
        let tok = self.peek().clone();
        match &tok.tok {
            Tok::LParen => {
                self.bump();
                let t = self.term(uses)?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Ident(name) if name == "H" => {
                self.bump();
                Ok(Term::Full)
            }
            Tok::Ident(name)
                if matches!(name.as_str(), "R" | "L" | "I") && *self.peek_at(1) == Tok::LParen =>
            {
                self.bump();
                self.bump();
                let inner = Box::new(self.term(uses)?);
                self.expect(Tok::RParen)?;
                Ok(match name.as_str() {
                    "R" => Term::RightIdeal(inner),
                    "L" => Term::LeftIdeal(inner),
                    _ => Term::TwoSidedIdeal(inner),
                })
            }
            Tok::Ident(name) if RESERVED.contains(&name.as_str()) => Err(Self::error_at(
                &tok,
                format!("`{name}` is reserved; did you mean `{name}(...)`?"),
            )),
            Tok::Ident(name) => {
                self.bump();
                uses.push((name.clone(), tok.clone()));
                Ok(Term::Var(name.clone()))
            }
            _ => Err(self.expected("a term")),
        }
    }
}

/// Parses conjecture text. Syntax errors and sort errors (unknown sorts,
/// unbound or doubly bound variables) carry a 1-based line and column.
pub fn parse(text: &str) -> Result<Conjecture, DslError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let (conjecture, uses) = parser.conjecture()?;
    for (name, tok) in uses {
        if !conjecture.binders.iter().any(|b| b.name == name) {
            return Err(DslError::Sort {
                line: tok.line,
                column: tok.column,
                message: format!("variable `{name}` is not bound"),
            });
        }
    }
    Ok(conjecture)
}
