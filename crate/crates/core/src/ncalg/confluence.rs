use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::expr::{Letter, NcExpr, Word};
use super::presentation::{Presentation, Strategy};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// An out-of-order pair has no rule, so normal forms are not unique.
    Uncovered {
        pair: String,
    },
    /// A rule rewrites a pair that is already in normal order.
    PatternInOrder {
        pattern: String,
    },
    ReplacementNotNormal {
        pattern: String,
    },
    /// Two rewrite paths from one word end in different normal forms.
    Ambiguity {
        word: String,
        left: String,
        right: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub max_deg: usize,
    pub words_checked: usize,
    pub violations: Vec<Violation>,
}

impl ConfluenceReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pair_name(p: &Presentation, a: Letter, b: Letter) -> String {
    format!("{} {}", p.generator(a).name, p.generator(b).name)
}

/// Checks rule coverage and resolves every ambiguity on words of length
/// 3 through `max_deg`: each single first step followed by both leftmost and
/// rightmost normalization must land on the same normal form.
pub fn local_confluence_check(p: &Presentation, max_deg: usize) -> Result<ConfluenceReport> {
    let n = p.alphabet().len() as Letter;
    let mut violations = Vec::new();

    for a in 0..n {
        for b in 0..n {
            let ruled = p.rule(a, b).is_some();
            if !p.in_order(a, b) && !ruled {
                violations.push(Violation::Uncovered {
                    pair: pair_name(p, a, b),
                });
            }
            if p.in_order(a, b) && ruled {
                violations.push(Violation::PatternInOrder {
                    pattern: pair_name(p, a, b),
                });
            }
        }
    }
    for r in p.rules() {
        let bad = r
            .replacement
            .terms()
            .keys()
            .any(|w| w.letters().windows(2).any(|x| !p.in_order(x[0], x[1])));
        if bad || !p.is_normal(&r.replacement) {
            violations.push(Violation::ReplacementNotNormal {
                pattern: pair_name(p, r.pattern.0, r.pattern.1),
            });
        }
    }

    let mut words_checked = 0;
    for len in 3..=max_deg.max(3) {
        let mut idx = vec![0 as Letter; len];
        loop {
            let w = Word(idx.clone());
            words_checked += 1;
            check_word(p, &w, &mut violations)?;
            if !advance(&mut idx, n) {
                break;
            }
        }
    }

    Ok(ConfluenceReport {
        presentation: p.name().to_string(),
        max_deg: max_deg.max(3),
        words_checked,
        violations,
    })
}

fn advance(idx: &mut [Letter], n: Letter) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

fn check_word(p: &Presentation, w: &Word, violations: &mut Vec<Violation>) -> Result<()> {
    let start = NcExpr::word(w.clone());
    let reference = p.normal_form_with(&start, Strategy::Leftmost)?;
    let mut candidates = vec![p.normal_form_with(&start, Strategy::Rightmost)?];
    for i in p.redexes(w) {
        let step = p.rewrite_at(w, i).expect("redex has a rule");
        candidates.push(p.normal_form_with(&step, Strategy::Leftmost)?);
        candidates.push(p.normal_form_with(&step, Strategy::Rightmost)?);
    }
    if let Some(bad) = candidates.into_iter().find(|c| *c != reference) {
        violations.push(Violation::Ambiguity {
            word: w.show(p).to_string(),
            left: reference.show(p).to_string(),
            right: bad.show(p).to_string(),
        });
    }
    Ok(())
}
