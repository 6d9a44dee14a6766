//! Named curves resolved from their defining expressions.

use crate::error::Result;
use crate::expr::Expr;
use crate::mcg::{CurveSource, Engine};
use crate::names::CurveName;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRef {
    name: CurveName,
    word: Word,
    definition: String,
}

impl CurveRef {
    pub fn name(&self) -> CurveName {
        self.name
    }

    /// Reduced, not cyclically normalized.
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// e.g. `S^-1 (b)`.
    pub fn definition(&self) -> &str {
        &self.definition
    }
}

impl Engine {
    pub fn resolve_curve(&self, name: CurveName) -> Result<CurveRef> {
        if let Some(c) = self.curve_cache.lock().expect("cache poisoned").get(&name) {
            return Ok(c.clone());
        }
        let (map, source) = self.curve_definition(name)?;
        let (src_word, src_name) = match source {
            CurveSource::Base(b) => (self.model().base_curve(b)?.clone(), b.to_string()),
            CurveSource::Named(n) => (self.resolve_curve(n)?.word, n.to_string()),
        };
        let f = self.eval(&Expr::parse(&map)?)?;
        let word = f.apply(&src_word)?;
        let definition = if map.is_empty() {
            src_name
        } else {
            format!("{map} ({src_name})")
        };
        let c = CurveRef {
            name,
            word,
            definition,
        };
        self.curve_cache
            .lock()
            .expect("cache poisoned")
            .entry(name)
            .or_insert_with(|| c.clone());
        Ok(c)
    }

    /// Image of a named curve under an expression.
    pub fn apply_to_curve(&self, expr: &str, name: CurveName) -> Result<Word> {
        let c = self.resolve_curve(name)?;
        self.eval_str(expr)?.apply(c.word())
    }

    /// `expr(u) ~ v` as unoriented curves.
    pub fn maps_curve(&self, expr: &str, from: CurveName, to: CurveName) -> Result<bool> {
        let img = self.apply_to_curve(expr, from)?;
        let target = self.resolve_curve(to)?;
        Ok(self.model().curve_equal(&img, target.word()))
    }
}
