use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::literal::{matrix_to_value, parse_matrix, parse_rational, rational_to_value};
use crate::automata::word::symbol_index;
use crate::automata::{Automaton, DeterministicSA, GeneralizedSA, TransformTable};
use crate::decomp::{Decomposition, Term};
use crate::error::{Error, Result};
use crate::ratmat::Rational;
use crate::source::{DependentSource, Factorization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Sa,
    Gsa,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonDoc {
    #[serde(rename = "type")]
    kind: Kind,
    states: Vec<String>,
    alphabet: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    transitions: Option<IndexMap<String, IndexMap<String, Option<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrices: Option<IndexMap<String, Value>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    coeff: Value,
    basis: Value,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionDoc {
    order: usize,
    terms: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SourceDoc {
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    gamma: IndexMap<String, IndexMap<String, Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    probabilistic: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorizationDoc {
    source: SourceDoc,
    machine: AutomatonDoc,
    basis: IndexMap<String, Value>,
}

fn from_value<T: serde::de::DeserializeOwned>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

/// Parses JSON text into a value, mapping syntax errors to [`Error::Format`].
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn check_keys<'a>(
    keys: impl Iterator<Item = &'a String>,
    known: &[String],
    unknown: fn(String) -> Error,
) -> Result<()> {
    for key in keys {
        if !known.contains(key) {
            return Err(unknown(key.clone()));
        }
    }
    Ok(())
}

impl AutomatonDoc {
    fn into_automaton(self) -> Result<Automaton> {
        match (self.kind, self.transitions, self.matrices) {
            (Kind::Sa, Some(transitions), None) => {
                check_keys(transitions.keys(), &self.alphabet, Error::UnknownSymbol)?;
                let tables = self
                    .alphabet
                    .iter()
                    .map(|x| {
                        let mut images = vec![None; self.states.len()];
                        if let Some(map) = transitions.get(x) {
                            for (from, to) in map {
                                let i = state_index(&self.states, from)?;
                                images[i] = to
                                    .as_ref()
                                    .map(|to| state_index(&self.states, to))
                                    .transpose()?;
                            }
                        }
                        TransformTable::new(images)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Automaton::Deterministic(DeterministicSA::new(
                    self.states,
                    self.alphabet,
                    tables,
                )?))
            }
            (Kind::Gsa, None, Some(matrices)) => {
                check_keys(matrices.keys(), &self.alphabet, Error::UnknownSymbol)?;
                let matrices = self
                    .alphabet
                    .iter()
                    .map(|x| {
                        let literal = matrices
                            .get(x)
                            .ok_or_else(|| Error::Format(format!("no matrix for symbol {x:?}")))?;
                        parse_matrix(literal)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Automaton::Generalized(GeneralizedSA::new(
                    self.states,
                    self.alphabet,
                    matrices,
                )?))
            }
            (Kind::Sa, ..) => Err(Error::Format(
                "an \"sa\" document needs \"transitions\" and no \"matrices\"".into(),
            )),
            (Kind::Gsa, ..) => Err(Error::Format(
                "a \"gsa\" document needs \"matrices\" and no \"transitions\"".into(),
            )),
        }
    }

    fn from_automaton(a: &Automaton) -> Self {
        match a {
            Automaton::Deterministic(sa) => {
                let transitions = sa
                    .alphabet()
                    .iter()
                    .zip(sa.transitions())
                    .map(|(x, t)| {
                        let map = t
                            .images()
                            .iter()
                            .enumerate()
                            .filter_map(|(i, image)| {
                                image
                                    .map(|j| (sa.states()[i].clone(), Some(sa.states()[j].clone())))
                            })
                            .collect();
                        (x.clone(), map)
                    })
                    .collect();
                AutomatonDoc {
                    kind: Kind::Sa,
                    states: sa.states().to_vec(),
                    alphabet: sa.alphabet().to_vec(),
                    transitions: Some(transitions),
                    matrices: None,
                }
            }
            Automaton::Generalized(gsa) => AutomatonDoc {
                kind: Kind::Gsa,
                states: gsa.states().to_vec(),
                alphabet: gsa.alphabet().to_vec(),
                transitions: None,
                matrices: Some(
                    gsa.alphabet()
                        .iter()
                        .zip(gsa.matrices())
                        .map(|(x, m)| (x.clone(), matrix_to_value(m)))
                        .collect(),
                ),
            },
        }
    }
}

fn state_index(states: &[String], name: &str) -> Result<usize> {
    states
        .iter()
        .position(|s| s == name)
        .ok_or_else(|| Error::UnknownState(name.to_string()))
}

/// Reads an automaton document (`"type": "sa"` or `"gsa"`).
pub fn automaton_from_value(value: Value) -> Result<Automaton> {
    from_value::<AutomatonDoc>(value)?.into_automaton()
}

pub fn automaton_from_str(text: &str) -> Result<Automaton> {
    automaton_from_value(parse_json(text)?)
}

pub fn automaton_to_value(a: &Automaton) -> Value {
    serde_json::to_value(AutomatonDoc::from_automaton(a)).expect("documents serialize")
}

pub fn automaton_to_string(a: &Automaton) -> String {
    to_pretty(&AutomatonDoc::from_automaton(a))
}

/// Reads a decomposition document `{"order": n, "terms": [...]}`.
pub fn decomposition_from_value(value: Value) -> Result<Decomposition> {
    let doc: DecompositionDoc = from_value(value)?;
    let terms = doc
        .terms
        .iter()
        .map(|t| {
            Ok(Term::new(
                parse_rational(&t.coeff)?,
                parse_matrix(&t.basis)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Decomposition::new(doc.order, terms)
}

pub fn decomposition_from_str(text: &str) -> Result<Decomposition> {
    decomposition_from_value(parse_json(text)?)
}

fn decomposition_doc(d: &Decomposition) -> DecompositionDoc {
    DecompositionDoc {
        order: d.order(),
        terms: d
            .terms()
            .iter()
            .map(|t| TermDoc {
                coeff: rational_to_value(&t.coeff),
                basis: matrix_to_value(&t.basis),
            })
            .collect(),
    }
}

pub fn decomposition_to_value(d: &Decomposition) -> Value {
    serde_json::to_value(decomposition_doc(d)).expect("documents serialize")
}

pub fn decomposition_to_string(d: &Decomposition) -> String {
    to_pretty(&decomposition_doc(d))
}

impl SourceDoc {
    fn into_source(self) -> Result<DependentSource> {
        check_keys(
            self.gamma.keys(),
            &self.input_alphabet,
            Error::UnknownSymbol,
        )?;
        let mut table =
            vec![vec![Rational::zero(); self.output_alphabet.len()]; self.input_alphabet.len()];
        for (x, row) in &self.gamma {
            let x = symbol_index(&self.input_alphabet, x)?;
            for (z, w) in row {
                let z = symbol_index(&self.output_alphabet, z)?;
                table[x][z] = parse_rational(w)?;
            }
        }
        let source = DependentSource::new(self.input_alphabet, self.output_alphabet, table)?;
        if let Some(flag) = self.probabilistic {
            if flag != source.is_probabilistic() {
                return Err(Error::Format(format!(
                    "\"probabilistic\" is {flag} but the weight rows say otherwise"
                )));
            }
        }
        Ok(source)
    }

    fn from_source(s: &DependentSource) -> Self {
        let gamma = s
            .input_alphabet()
            .iter()
            .zip(s.table())
            .map(|(x, row)| {
                let row = s
                    .output_alphabet()
                    .iter()
                    .zip(row)
                    .map(|(z, w)| (z.clone(), rational_to_value(w)))
                    .collect();
                (x.clone(), row)
            })
            .collect();
        SourceDoc {
            input_alphabet: s.input_alphabet().to_vec(),
            output_alphabet: s.output_alphabet().to_vec(),
            gamma,
            probabilistic: Some(s.is_probabilistic()),
        }
    }
}

/// Reads a bare source object, or the `"source"` of a factorization
/// document.
pub fn source_from_value(mut value: Value) -> Result<DependentSource> {
    if let Some(inner) = value.get_mut("source") {
        return from_value::<SourceDoc>(inner.take())?.into_source();
    }
    from_value::<SourceDoc>(value)?.into_source()
}

pub fn source_to_value(s: &DependentSource) -> Value {
    serde_json::to_value(SourceDoc::from_source(s)).expect("documents serialize")
}

/// Reads a factorization document; the stored basis must agree with the
/// machine's transitions.
pub fn factorization_from_value(value: Value) -> Result<Factorization> {
    let doc: FactorizationDoc = from_value(value)?;
    let source = doc.source.into_source()?;
    let machine = match doc.machine.into_automaton()? {
        Automaton::Deterministic(sa) => sa,
        Automaton::Generalized(_) => {
            return Err(Error::Format(
                "the machine must be an \"sa\" document".into(),
            ))
        }
    };
    check_keys(doc.basis.keys(), machine.alphabet(), Error::UnknownSymbol)?;
    let basis = machine
        .alphabet()
        .iter()
        .map(|z| {
            let literal = doc
                .basis
                .get(z)
                .ok_or_else(|| Error::Format(format!("no basis matrix for {z:?}")))?;
            parse_matrix(literal)
        })
        .collect::<Result<Vec<_>>>()?;
    Factorization::with_basis(source, machine, basis)
}

pub fn factorization_from_str(text: &str) -> Result<Factorization> {
    factorization_from_value(parse_json(text)?)
}

fn factorization_doc(f: &Factorization) -> FactorizationDoc {
    FactorizationDoc {
        source: SourceDoc::from_source(f.source()),
        machine: AutomatonDoc::from_automaton(&Automaton::Deterministic(f.machine().clone())),
        basis: f
            .machine()
            .alphabet()
            .iter()
            .zip(f.basis())
            .map(|(z, m)| (z.clone(), matrix_to_value(m)))
            .collect(),
    }
}

pub fn factorization_to_value(f: &Factorization) -> Value {
    serde_json::to_value(factorization_doc(f)).expect("documents serialize")
}

pub fn factorization_to_string(f: &Factorization) -> String {
    to_pretty(&factorization_doc(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::madic;
    use crate::automata::tests::{collapse_sa, mixed_gsa};
    use crate::decomp::semidet_decompose;
    use crate::ratmat::RMatrix;
    use crate::source::factorize;
    use serde_json::json;

    #[test]
    fn reads_a_deterministic_automaton() {
        let text = r#"{
            "type": "sa",
            "states": ["1", "2", "3"],
            "alphabet": ["x", "y"],
            "transitions": {
                "x": {"1": "1", "2": "1", "3": "1"},
                "y": {"1": "2", "2": "2", "3": "3"}
            }
        }"#;
        assert_eq!(
            automaton_from_str(text).unwrap(),
            Automaton::Deterministic(collapse_sa())
        );
    }

    #[test]
    fn missing_transitions_are_undefined() {
        let text = r#"{"type": "sa", "states": ["p", "q"], "alphabet": ["a", "b"],
                       "transitions": {"a": {"p": "p", "q": null}}}"#;
        let Automaton::Deterministic(sa) = automaton_from_str(text).unwrap() else {
            panic!("expected an sa");
        };
        assert_eq!(sa.delta("a").unwrap().images(), &[Some(0), None]);
        assert_eq!(sa.delta("b").unwrap().images(), &[None, None]);
    }

    #[test]
    fn reads_a_generalized_automaton() {
        let text = r#"{"type": "gsa", "states": ["s1", "s2"], "alphabet": ["x1", "x2"],
                       "matrices": {"x1": [[2, 3], [1, 0]], "x2": [["1", "2"], ["0", "3"]]}}"#;
        assert_eq!(
            automaton_from_str(text).unwrap(),
            Automaton::Generalized(mixed_gsa())
        );
    }

    #[test]
    fn rejects_inconsistent_automaton_documents() {
        let cases = [
            json!({"type": "sa", "states": ["p"], "alphabet": ["a"], "matrices": {"a": [[1]]}}),
            json!({"type": "gsa", "states": ["p"], "alphabet": ["a"], "transitions": {}}),
            json!({"type": "gsa", "states": ["p"], "alphabet": ["a"], "matrices": {}}),
            json!({"type": "gsa", "states": ["p"], "alphabet": ["a"], "matrices": {"a": [[1]], "b": [[1]]}}),
            json!({"type": "gsa", "states": ["p", "q"], "alphabet": ["a"], "matrices": {"a": [[1]]}}),
            json!({"type": "gsa", "states": ["p"], "alphabet": ["a"], "matrices": {"a": [[-1]]}}),
            json!({"type": "sa", "states": ["p"], "alphabet": ["a"], "transitions": {"a": {"p": "r"}}}),
            json!({"type": "sa", "states": ["p"], "alphabet": ["a"], "transitions": {"a": {"r": "p"}}}),
            json!({"type": "sa", "states": [], "alphabet": [], "transitions": {}}),
            json!({"type": "sa", "states": ["p", "p"], "alphabet": [], "transitions": {}}),
            json!({"type": "pda", "states": ["p"], "alphabet": [], "transitions": {}}),
            json!({"type": "sa", "states": ["p"], "alphabet": [], "transitions": {}, "extra": 1}),
        ];
        for case in cases {
            assert!(automaton_from_value(case.clone()).is_err(), "{case}");
        }
        assert!(automaton_from_str("{").is_err());
    }

    #[test]
    fn automaton_documents_round_trip() {
        for a in [
            Automaton::Deterministic(collapse_sa()),
            Automaton::Generalized(mixed_gsa()),
            Automaton::Generalized(madic(3).unwrap()),
        ] {
            assert_eq!(automaton_from_str(&automaton_to_string(&a)).unwrap(), a);
        }
    }

    #[test]
    fn gsa_output_is_stable() {
        let text = automaton_to_string(&Automaton::Generalized(madic(2).unwrap()));
        let value: Value = parse_json(&text).unwrap();
        assert_eq!(
            value,
            json!({
                "type": "gsa",
                "states": ["s1", "s2"],
                "alphabet": ["0", "1"],
                "matrices": {
                    "0": [["1", "0"], ["1/2", "1/2"]],
                    "1": [["1/2", "1/2"], ["0", "1"]]
                }
            })
        );
    }

    #[test]
    fn decomposition_documents() {
        let d = semidet_decompose(&RMatrix::from_integers(&[[1, 2], [0, 3]]).unwrap());
        let value = decomposition_to_value(&d);
        assert_eq!(
            value,
            json!({"order": 2, "terms": [
                {"coeff": "1", "basis": [["1", "0"], ["0", "1"]]},
                {"coeff": "2", "basis": [["0", "1"], ["0", "1"]]}
            ]})
        );
        assert_eq!(decomposition_from_value(value).unwrap(), d);
        assert!(decomposition_from_value(
            json!({"order": 2, "terms": [{"coeff": "0", "basis": [[1, 0], [0, 1]]}]})
        )
        .is_err());
        assert!(decomposition_from_value(
            json!({"order": 2, "terms": [{"coeff": "1", "basis": [[1, 1], [0, 1]]}]})
        )
        .is_err());
        assert!(decomposition_from_value(json!({"order": 0, "terms": []})).is_err());
    }

    #[test]
    fn factorization_documents_round_trip() {
        for a in [mixed_gsa(), madic(3).unwrap()] {
            let f = factorize(&a);
            let text = factorization_to_string(&f);
            assert_eq!(factorization_from_str(&text).unwrap(), f);
            assert_eq!(
                source_from_value(parse_json(&text).unwrap()).unwrap(),
                *f.source()
            );
        }
    }

    #[test]
    fn factorization_document_layout() {
        let value = factorization_to_value(&factorize(&mixed_gsa()));
        assert_eq!(
            value["source"]["gamma"]["x1"],
            json!({"z1": "1", "z2": "1", "z3": "3", "z4": "0", "z5": "0"})
        );
        assert_eq!(value["source"]["probabilistic"], json!(false));
        assert_eq!(value["machine"]["transitions"]["z2"], json!({"s1": "s1"}));
        assert_eq!(value["basis"]["z3"], json!([["0", "1"], ["0", "0"]]));
    }

    #[test]
    fn rejects_inconsistent_factorizations() {
        let good = factorization_to_value(&factorize(&madic(2).unwrap()));

        let mut flag = good.clone();
        flag["source"]["probabilistic"] = json!(false);
        assert!(factorization_from_value(flag).is_err());

        let mut basis = good.clone();
        basis["basis"]["z1"] = json!([[0, 1], [0, 1]]);
        assert_eq!(
            factorization_from_value(basis),
            Err(Error::BasisMismatch("z1".into()))
        );

        let mut unknown = good.clone();
        unknown["source"]["gamma"]["0"]["z9"] = json!("1");
        assert!(factorization_from_value(unknown).is_err());

        let mut gsa_machine = good.clone();
        gsa_machine["machine"] =
            json!({"type": "gsa", "states": ["s1", "s2"], "alphabet": [], "matrices": {}});
        assert!(factorization_from_value(gsa_machine).is_err());
    }
}
