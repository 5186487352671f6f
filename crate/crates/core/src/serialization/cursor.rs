//! Character-level scanner shared by the N-Triples, Turtle, and query
//! parsers. Tracks line and column (both 1-based) for diagnostics.

use crate::model::{Iri, Literal, PrefixMap};
use crate::serialization::ParseDiagnostic;

pub(crate) struct Cursor<'a> {
    input: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(input: &'a str) -> Self {
        Cursor { input, pos: 0, line: 1, col: 1 }
    }

    /// A cursor over a single line of a larger document, reporting positions
    /// against the given line number.
    pub fn for_line(input: &'a str, line: usize) -> Self {
        Cursor { input, pos: 0, line, col: 1 }
    }

    pub fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn peek_second(&self) -> Option<char> {
        let mut chars = self.input[self.pos..].chars();
        chars.next();
        chars.next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Consumes `c` if it is next.
    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn at_eof(&self) -> bool {
        self.pos >= self.input.len()
    }

    pub fn position(&self) -> (usize, usize) {
        (self.line, self.col)
    }

    pub fn diag(&self, message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic::error(self.line, self.col, message)
    }

    pub fn diag_at(&self, at: (usize, usize), message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic::error(at.0, at.1, message)
    }

    /// Skips spaces, tabs, and carriage returns, but never a newline.
    pub fn skip_inline_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t' | '\r')) {
            self.bump();
        }
    }

    /// Skips all whitespace (including newlines) and `#` comments.
    pub fn skip_ws_and_comments(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while !matches!(self.peek(), None | Some('\n')) {
                        self.bump();
                    }
                }
                _ => return,
            }
        }
    }

    /// Scans `<...>` and returns a validated IRI. The cursor must sit on '<'.
    pub fn scan_iriref(&mut self) -> Result<Iri, ParseDiagnostic> {
        let start = self.position();
        self.bump(); // '<'
        let mut text = String::new();
        loop {
            match self.peek() {
                None | Some('\n') => {
                    return Err(self.diag_at(start, "unterminated IRI reference"))
                }
                Some('>') => {
                    self.bump();
                    break;
                }
                Some(c) => {
                    text.push(c);
                    self.bump();
                }
            }
        }
        Iri::new(text).map_err(|e| self.diag_at(start, e.to_string()))
    }

    /// Scans a quoted string and resolves escapes. `\"`, `\\`, `\n`, and
    /// `\t` are recognized; a backslash before anything else is kept
    /// verbatim. The cursor must sit on the opening quote.
    fn scan_string(&mut self) -> Result<String, ParseDiagnostic> {
        let start = self.position();
        self.bump(); // '"'
        let mut text = String::new();
        loop {
            match self.peek() {
                None | Some('\n') => {
                    return Err(self.diag_at(start, "unterminated string literal"))
                }
                Some('"') => {
                    self.bump();
                    return Ok(text);
                }
                Some('\\') => {
                    self.bump();
                    match self.peek() {
                        Some('n') => {
                            text.push('\n');
                            self.bump();
                        }
                        Some('t') => {
                            text.push('\t');
                            self.bump();
                        }
                        Some('"') => {
                            text.push('"');
                            self.bump();
                        }
                        Some('\\') => {
                            text.push('\\');
                            self.bump();
                        }
                        _ => text.push('\\'),
                    }
                }
                Some(c) => {
                    text.push(c);
                    self.bump();
                }
            }
        }
    }

    /// Scans a full literal: quoted string plus an optional `@lang` tag or
    /// `^^` datatype. Datatype qnames are accepted only when a prefix map is
    /// supplied (the Turtle and query grammars; N-Triples passes `None`).
    pub fn scan_literal(
        &mut self,
        prefixes: Option<&PrefixMap>,
    ) -> Result<Literal, ParseDiagnostic> {
        let lexical = self.scan_string()?;
        if self.eat('@') {
            let tag_start = self.position();
            let mut tag = String::new();
            while let Some(c) = self.peek() {
                if c.is_ascii_alphanumeric() || c == '-' {
                    tag.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            if tag.is_empty() || !tag.starts_with(|c: char| c.is_ascii_alphabetic()) {
                return Err(self.diag_at(tag_start, "invalid language tag"));
            }
            return Ok(Literal::with_language(lexical, tag));
        }
        if self.peek() == Some('^') {
            let caret = self.position();
            self.bump();
            if !self.eat('^') {
                return Err(self.diag_at(caret, "expected '^^' before datatype"));
            }
            let datatype = match self.peek() {
                Some('<') => self.scan_iriref()?,
                Some(_) if prefixes.is_some() => {
                    let at = self.position();
                    let name = self.scan_name()?;
                    prefixes
                        .unwrap()
                        .expand(&name)
                        .map_err(|e| self.diag_at(at, e.to_string()))?
                }
                _ => return Err(self.diag("expected datatype IRI after '^^'")),
            };
            return Ok(Literal::with_datatype(lexical, datatype));
        }
        Ok(Literal::plain(lexical))
    }

    /// Scans `_:label`. The cursor must sit on '_'.
    pub fn scan_blank(&mut self) -> Result<String, ParseDiagnostic> {
        let start = self.position();
        self.bump(); // '_'
        if !self.eat(':') {
            return Err(self.diag_at(start, "expected ':' after '_' in blank node"));
        }
        let mut label = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                label.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if label.is_empty() {
            return Err(self.diag_at(start, "blank node label is empty"));
        }
        Ok(label)
    }

    /// Scans a bare or prefixed name (`a`, `rdf:type`, `info:BVCOE`, ...).
    /// Trailing dots are left in the input so `info:x.` ends a statement.
    pub fn scan_name(&mut self) -> Result<String, ParseDiagnostic> {
        let start = self.position();
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | ':') {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        while name.ends_with('.') {
            name.pop();
            self.pos -= 1;
            self.col -= 1;
        }
        if name.is_empty() {
            return Err(self.diag_at(start, "expected a name"));
        }
        Ok(name)
    }

    /// Scans letters only; used for directive keywords.
    pub fn scan_word(&mut self) -> String {
        let mut word = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        word
    }

    /// True when the next two characters are `_:`.
    pub fn at_blank_start(&self) -> bool {
        self.peek() == Some('_') && self.peek_second() == Some(':')
    }
}
