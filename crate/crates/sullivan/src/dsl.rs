//! Text format for models and morphisms.
//!
//! ```text
//! # complex projective 3-space
//! model CP3 { gen x : 2; gen w : 7; d x = 0; d w = x^4; }
//! morphism f : CP3 -> CP3 { x -> 2 x; w -> 256 w; }
//! ```
//!
//! Grammar:
//!
//! ```text
//! file     := decl*
//! decl     := model | morphism
//! model    := "model" IDENT "{" (genDecl | dDecl)* "}"
//! genDecl  := "gen" IDENT ":" INT ";"
//! dDecl    := "d" IDENT "=" poly ";"
//! morphism := "morphism" IDENT ":" IDENT "->" IDENT "{" (IDENT "->" poly ";")* "}"
//! poly     := ("+" | "-")? term (("+" | "-") term)*
//! term     := RATIONAL? (IDENT ("^" INT)?)*
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use sullivan_core::cdga::FreeCdga;
use sullivan_core::graded::{Context, Polynomial, Scalar, Variable};
use sullivan_core::morphism::CdgaMorphism;

/// A `line:column` location, both 1-based. Positions never take part in
/// equality, so reparsed files compare structurally.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub message: String,
}

impl Diagnostic {
    fn new(pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub exp: u32,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub degree: u32,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffDecl {
    pub generator: String,
    pub value: PolyExpr,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelDecl {
    pub name: String,
    pub gens: Vec<GenDecl>,
    pub diffs: Vec<DiffDecl>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageDecl {
    pub generator: String,
    pub value: PolyExpr,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub images: Vec<ImageDecl>,
    pub pos: Pos,
    pub source_pos: Pos,
    pub target_pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Model(ModelDecl),
    Morphism(MorphismDecl),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceFile {
    pub decls: Vec<Decl>,
}

impl SourceFile {
    pub fn models(&self) -> impl Iterator<Item = &ModelDecl> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Model(m) => Some(m),
            _ => None,
        })
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &MorphismDecl> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Morphism(m) => Some(m),
            _ => None,
        })
    }

    pub fn model(&self, name: &str) -> Option<&ModelDecl> {
        self.models().find(|m| m.name == name)
    }

    pub fn morphism(&self, name: &str) -> Option<&MorphismDecl> {
        self.morphisms().find(|m| m.name == name)
    }
}

// ---------------------------------------------------------------- lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Colon,
    Semi,
    LBrace,
    RBrace,
    Arrow,
    Eq,
    Plus,
    Minus,
    Caret,
    Slash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{}`", s),
            Tok::Int(s) => format!("number `{}`", s),
            Tok::Colon => "`:`".into(),
            Tok::Semi => "`;`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, Diagnostic> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            out.push((Tok::Int(s), pos));
            continue;
        }
        bump(&mut chars);
        let tok = match c {
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '=' => Tok::Eq,
            '+' => Tok::Plus,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '-' => {
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    Tok::Arrow
                } else {
                    Tok::Minus
                }
            }
            other => return Err(Diagnostic::new(pos, format!("unexpected character `{}`", other))),
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

// ---------------------------------------------------------------- parser

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        Diagnostic::new(self.pos(), format!("expected {}, found {}", wanted, self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, Diagnostic> {
        if *self.peek() == tok {
            Ok(self.next().1)
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), Diagnostic> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let p = self.next().1;
                Ok((s, p))
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<Pos, Diagnostic> {
        match self.peek() {
            Tok::Ident(s) if s == kw => Ok(self.next().1),
            _ => Err(self.unexpected(&format!("`{}`", kw))),
        }
    }

    fn int(&mut self) -> Result<(u64, Pos), Diagnostic> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let p = self.pos();
                let v = s
                    .parse::<u64>()
                    .map_err(|_| Diagnostic::new(p, format!("number `{}` is too large", s)))?;
                self.next();
                Ok((v, p))
            }
            _ => Err(self.unexpected("integer")),
        }
    }

    fn u32(&mut self) -> Result<(u32, Pos), Diagnostic> {
        let (v, p) = self.int()?;
        u32::try_from(v)
            .map(|v| (v, p))
            .map_err(|_| Diagnostic::new(p, format!("number `{}` is too large", v)))
    }

    fn file(&mut self) -> Result<SourceFile, Diagnostic> {
        let mut decls = Vec::new();
        loop {
            match self.peek() {
                Tok::Eof => break,
                Tok::Ident(s) if s == "model" => decls.push(Decl::Model(self.model()?)),
                Tok::Ident(s) if s == "morphism" => decls.push(Decl::Morphism(self.morphism()?)),
                _ => return Err(self.unexpected("`model` or `morphism`")),
            }
        }
        Ok(SourceFile { decls })
    }

    fn model(&mut self) -> Result<ModelDecl, Diagnostic> {
        let pos = self.keyword("model")?;
        let (name, _) = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut gens = Vec::new();
        let mut diffs = Vec::new();
        loop {
            match self.peek() {
                Tok::RBrace => {
                    self.next();
                    break;
                }
                Tok::Ident(s) if s == "gen" => {
                    self.next();
                    let (name, pos) = self.ident()?;
                    self.expect(Tok::Colon)?;
                    let (degree, _) = self.u32()?;
                    self.expect(Tok::Semi)?;
                    gens.push(GenDecl { name, degree, pos });
                }
                Tok::Ident(s) if s == "d" => {
                    self.next();
                    let (generator, pos) = self.ident()?;
                    self.expect(Tok::Eq)?;
                    let value = self.poly()?;
                    self.expect(Tok::Semi)?;
                    diffs.push(DiffDecl { generator, value, pos });
                }
                _ => return Err(self.unexpected("`gen`, `d` or `}`")),
            }
        }
        Ok(ModelDecl { name, gens, diffs, pos })
    }

    fn morphism(&mut self) -> Result<MorphismDecl, Diagnostic> {
        let pos = self.keyword("morphism")?;
        let (name, _) = self.ident()?;
        self.expect(Tok::Colon)?;
        let (source, source_pos) = self.ident()?;
        self.expect(Tok::Arrow)?;
        let (target, target_pos) = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut images = Vec::new();
        loop {
            if *self.peek() == Tok::RBrace {
                self.next();
                break;
            }
            let (generator, pos) = match self.ident() {
                Ok(x) => x,
                Err(_) => return Err(self.unexpected("generator name or `}`")),
            };
            self.expect(Tok::Arrow)?;
            let value = self.poly()?;
            self.expect(Tok::Semi)?;
            images.push(ImageDecl { generator, value, pos });
        }
        Ok(MorphismDecl {
            name,
            source,
            target,
            images,
            pos,
            source_pos,
            target_pos,
        })
    }

    fn poly(&mut self) -> Result<PolyExpr, Diagnostic> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Tok::Minus => {
                self.next();
                true
            }
            Tok::Plus => {
                self.next();
                false
            }
            _ => false,
        };
        loop {
            let mut term = self.term()?;
            if negative {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => break,
            }
            self.next();
        }
        Ok(PolyExpr { terms })
    }

    fn term(&mut self) -> Result<Term, Diagnostic> {
        let mut coeff = Scalar::one();
        let mut has_coeff = false;
        if let Tok::Int(_) = self.peek() {
            let (n, _) = self.int()?;
            let mut c = Scalar::from_integer(n.into());
            if *self.peek() == Tok::Slash {
                self.next();
                let (den, p) = self.int()?;
                if den == 0 {
                    return Err(Diagnostic::new(p, "zero denominator"));
                }
                c = Scalar::new(n.into(), den.into());
            }
            coeff = c;
            has_coeff = true;
        }
        let mut factors = Vec::new();
        while let Tok::Ident(name) = self.peek().clone() {
            let pos = self.next().1;
            let mut exp = 1;
            if *self.peek() == Tok::Caret {
                self.next();
                exp = self.u32()?.0;
            }
            factors.push(Factor { name, exp, pos });
        }
        if !has_coeff && factors.is_empty() {
            return Err(self.unexpected("a term"));
        }
        Ok(Term { coeff, factors })
    }
}

pub fn parse_source(text: &str) -> Result<SourceFile, Diagnostic> {
    let toks = lex(text)?;
    Parser { toks, at: 0 }.file()
}

// ---------------------------------------------------------------- printer

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            let mut first = true;
            if !abs.is_one() || t.factors.is_empty() {
                write!(f, "{}", abs)?;
                first = false;
            }
            for fac in &t.factors {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                f.write_str(&fac.name)?;
                if fac.exp != 1 {
                    write!(f, "^{}", fac.exp)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for ModelDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {} {{", self.name)?;
        for g in &self.gens {
            writeln!(f, "    gen {} : {};", g.name, g.degree)?;
        }
        for d in &self.diffs {
            writeln!(f, "    d {} = {};", d.generator, d.value)?;
        }
        f.write_str("}\n")
    }
}

impl fmt::Display for MorphismDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "morphism {} : {} -> {} {{", self.name, self.source, self.target)?;
        for i in &self.images {
            writeln!(f, "    {} -> {};", i.generator, i.value)?;
        }
        f.write_str("}\n")
    }
}

impl fmt::Display for SourceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.decls.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            match d {
                Decl::Model(m) => write!(f, "{}", m)?,
                Decl::Morphism(m) => write!(f, "{}", m)?,
            }
        }
        Ok(())
    }
}

fn expr_of(p: &Polynomial) -> PolyExpr {
    if p.is_zero() {
        return PolyExpr {
            terms: vec![Term {
                coeff: Scalar::zero(),
                factors: Vec::new(),
            }],
        };
    }
    let vars = p.context().variables();
    let terms = p
        .terms()
        .map(|(m, c)| Term {
            coeff: c.clone(),
            factors: m
                .factors()
                .iter()
                .map(|&(i, e)| Factor {
                    name: vars[i].name().to_string(),
                    exp: e,
                    pos: Pos::default(),
                })
                .collect(),
        })
        .collect();
    PolyExpr { terms }
}

/// Declaration of `model` under `name`, generators in canonical order.
pub fn model_decl(name: &str, model: &FreeCdga) -> ModelDecl {
    let gens = model
        .generators()
        .iter()
        .map(|v| GenDecl {
            name: v.name().to_string(),
            degree: v.degree(),
            pos: Pos::default(),
        })
        .collect();
    let diffs = model
        .generators()
        .iter()
        .enumerate()
        .map(|(i, v)| DiffDecl {
            generator: v.name().to_string(),
            value: expr_of(model.d_generator(i)),
            pos: Pos::default(),
        })
        .collect();
    ModelDecl {
        name: name.to_string(),
        gens,
        diffs,
        pos: Pos::default(),
    }
}

pub fn morphism_decl(name: &str, source: &str, target: &str, f: &CdgaMorphism) -> MorphismDecl {
    let images = f
        .source()
        .generators()
        .iter()
        .zip(f.images())
        .map(|(v, p)| ImageDecl {
            generator: v.name().to_string(),
            value: expr_of(p),
            pos: Pos::default(),
        })
        .collect();
    MorphismDecl {
        name: name.to_string(),
        source: source.to_string(),
        target: target.to_string(),
        images,
        pos: Pos::default(),
        source_pos: Pos::default(),
        target_pos: Pos::default(),
    }
}

// ---------------------------------------------------------------- semantics

fn eval(ctx: &Arc<Context>, e: &PolyExpr) -> Result<Polynomial, Diagnostic> {
    let mut total = Polynomial::zero(ctx);
    for t in &e.terms {
        let mut p = Polynomial::constant(ctx, t.coeff.clone());
        for fac in &t.factors {
            let v = Polynomial::var(ctx, &fac.name)
                .map_err(|_| Diagnostic::new(fac.pos, format!("unknown generator `{}`", fac.name)))?;
            p = &p * &v.pow(fac.exp);
        }
        total = &total + &p;
    }
    Ok(total)
}

/// Builds the model without validating `d`; call `validate` on the result
/// for degree and `d∘d` checks.
pub fn build_model(decl: &ModelDecl) -> Result<FreeCdga, Diagnostic> {
    let mut seen = BTreeSet::new();
    for g in &decl.gens {
        if !seen.insert(g.name.as_str()) {
            return Err(Diagnostic::new(g.pos, format!("generator `{}` declared twice", g.name)));
        }
        if g.degree == 0 {
            return Err(Diagnostic::new(g.pos, format!("generator `{}` must have positive degree", g.name)));
        }
    }
    let ctx = Context::new(decl.gens.iter().map(|g| Variable::new(g.name.clone(), g.degree)))
        .map_err(|e| Diagnostic::new(decl.pos, e.to_string()))?;
    let mut done = BTreeSet::new();
    let mut diffs = Vec::new();
    for d in &decl.diffs {
        if !seen.contains(d.generator.as_str()) {
            return Err(Diagnostic::new(d.pos, format!("unknown generator `{}`", d.generator)));
        }
        if !done.insert(d.generator.as_str()) {
            return Err(Diagnostic::new(d.pos, format!("differential of `{}` given twice", d.generator)));
        }
        diffs.push((d.generator.clone(), eval(&ctx, &d.value)?));
    }
    FreeCdga::new_unchecked(&ctx, diffs).map_err(|e| Diagnostic::new(decl.pos, e.to_string()))
}

/// Builds the morphism without validating it against the differentials.
pub fn build_morphism(
    decl: &MorphismDecl,
    models: &BTreeMap<String, FreeCdga>,
) -> Result<CdgaMorphism, Diagnostic> {
    let src = models
        .get(&decl.source)
        .ok_or_else(|| Diagnostic::new(decl.source_pos, format!("unknown model `{}`", decl.source)))?;
    let tgt = models
        .get(&decl.target)
        .ok_or_else(|| Diagnostic::new(decl.target_pos, format!("unknown model `{}`", decl.target)))?;
    let mut done = BTreeSet::new();
    let mut images = Vec::new();
    for i in &decl.images {
        if src.context().index_of(&i.generator).is_none() {
            return Err(Diagnostic::new(i.pos, format!("unknown generator `{}`", i.generator)));
        }
        if !done.insert(i.generator.as_str()) {
            return Err(Diagnostic::new(i.pos, format!("image of `{}` given twice", i.generator)));
        }
        images.push((i.generator.clone(), eval(tgt.context(), &i.value)?));
    }
    CdgaMorphism::new_unchecked(src, tgt, images).map_err(|e| Diagnostic::new(decl.pos, e.to_string()))
}

/// All models and morphisms of a file, keyed by name.
#[derive(Clone, Debug, Default)]
pub struct Program {
    pub models: BTreeMap<String, FreeCdga>,
    pub morphisms: BTreeMap<String, CdgaMorphism>,
}

pub fn build_program(file: &SourceFile) -> Result<Program, Diagnostic> {
    let mut prog = Program::default();
    for d in &file.decls {
        match d {
            Decl::Model(m) => {
                if prog.models.contains_key(&m.name) {
                    return Err(Diagnostic::new(m.pos, format!("model `{}` defined twice", m.name)));
                }
                prog.models.insert(m.name.clone(), build_model(m)?);
            }
            Decl::Morphism(m) => {
                if prog.morphisms.contains_key(&m.name) {
                    return Err(Diagnostic::new(m.pos, format!("morphism `{}` defined twice", m.name)));
                }
                let f = build_morphism(m, &prog.models)?;
                prog.morphisms.insert(m.name.clone(), f);
            }
        }
    }
    Ok(prog)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cp3_parses_and_validates() {
        let f = parse_source("model CP3 { gen x : 2; gen w : 7; d x = 0; d w = x^4; }").unwrap();
        let m = build_model(f.model("CP3").unwrap()).unwrap();
        assert!(m.validate().is_valid());
        let cat = sullivan_core::catalog::cpn(3).unwrap();
        assert_eq!(m.d_of("w").unwrap().to_string(), cat.d_of("v").unwrap().to_string());
    }

    #[test]
    fn unknown_generator_position() {
        let text = "model M {\n  gen x : 2;\n  gen w : 3;\n  d w = x^4 + y;\n}";
        let f = parse_source(text).unwrap();
        let err = build_model(f.model("M").unwrap()).unwrap_err();
        assert_eq!((err.pos.line, err.pos.col), (4, 15));
        assert!(err.message.contains("`y`"));
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_source("model M { gen x 2; }").unwrap_err();
        assert_eq!((err.pos.line, err.pos.col), (1, 17));
    }

    #[test]
    fn comments_and_round_trip() {
        let text = "# header\nmodel M { gen x : 2; gen y : 3; d y = -1/2 x^2 + 0; }\nmorphism f : M -> M { x -> 2 x; y -> 4 y; }\n";
        let f = parse_source(text).unwrap();
        let printed = f.to_string();
        let again = parse_source(&printed).unwrap();
        assert_eq!(f, again);
        assert_eq!(printed, again.to_string());
        let prog = build_program(&f).unwrap();
        assert!(prog.morphisms["f"].validate().is_valid());
    }
}
