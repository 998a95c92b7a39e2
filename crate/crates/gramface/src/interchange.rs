//! The subspace interchange file: a JSON document with fields `n`, `d`,
//! `order`, and either `generators` (forms as monomial-to-rational maps) or
//! `complement_monomials` (the space is the apolar complement of their span).
//!
//! Rationals are exact `p/q` decimal strings and monomials use the
//! `x1^2*x3` text format with 1-based variables. Files written by this
//! module re-load to the identical space and re-save byte-for-byte; arbitrary
//! generator lists are canonicalized on load.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::echelon::Rat;
use crate::formspace::{Form, FormSpace};
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, OrderBlock, OrderKind};
use crate::Error;

#[derive(Serialize, Deserialize, Clone, Debug)]
struct BlockDto {
    /// 1-based variable indices.
    vars: Vec<usize>,
    kind: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
struct OrderDto {
    kind: String,
    /// 1-based variable indices from least to most significant.
    small_to_large: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<BlockDto>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
struct SpaceFile {
    n: usize,
    d: u32,
    order: OrderDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<BTreeMap<String, String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    complement_monomials: Option<Vec<String>>,
}

fn kind_to_string(kind: OrderKind) -> String {
    match kind {
        OrderKind::Lex => "lex".into(),
        OrderKind::GrLex => "grlex".into(),
    }
}

fn kind_from_string(s: &str) -> Result<OrderKind, Error> {
    match s {
        "lex" => Ok(OrderKind::Lex),
        "grlex" => Ok(OrderKind::GrLex),
        other => Err(Error::InvalidOrder(format!("unknown order kind `{other}`"))),
    }
}

fn order_to_dto(order: &MonomialOrder) -> OrderDto {
    let blocks = order.blocks();
    OrderDto {
        kind: if blocks.is_empty() {
            kind_to_string(order.kind())
        } else {
            "block".into()
        },
        small_to_large: order.small_to_large().iter().map(|&v| v + 1).collect(),
        blocks: (!blocks.is_empty()).then(|| {
            blocks
                .iter()
                .map(|b| BlockDto {
                    vars: b.vars.iter().map(|&v| v + 1).collect(),
                    kind: kind_to_string(b.kind),
                })
                .collect()
        }),
    }
}

fn order_from_dto(dto: &OrderDto, n: usize) -> Result<MonomialOrder, Error> {
    if dto.small_to_large.len() != n {
        return Err(Error::InvalidOrder(format!(
            "orientation lists {} variables, space has {n}",
            dto.small_to_large.len()
        )));
    }
    let mut small_to_large = Vec::with_capacity(n);
    for &v in &dto.small_to_large {
        if v == 0 || v > n {
            return Err(Error::InvalidOrder(format!(
                "variable index {v} out of range 1..={n}"
            )));
        }
        small_to_large.push(v - 1);
    }
    match dto.kind.as_str() {
        "block" => {
            let blocks = dto.blocks.as_deref().unwrap_or_default();
            if blocks.is_empty() {
                return Err(Error::InvalidOrder(
                    "block order needs a non-empty `blocks` list".into(),
                ));
            }
            let mut parsed = Vec::with_capacity(blocks.len());
            for b in blocks {
                let mut vars = Vec::with_capacity(b.vars.len());
                for &v in &b.vars {
                    if v == 0 || v > n {
                        return Err(Error::InvalidOrder(format!(
                            "block variable index {v} out of range 1..={n}"
                        )));
                    }
                    vars.push(v - 1);
                }
                parsed.push(OrderBlock {
                    vars,
                    kind: kind_from_string(&b.kind)?,
                });
            }
            MonomialOrder::block(small_to_large, parsed)
        }
        kind => {
            if dto.blocks.is_some() {
                return Err(Error::InvalidOrder("`blocks` requires kind `block`".into()));
            }
            MonomialOrder::simple(kind_from_string(kind)?, small_to_large)
        }
    }
}

/// Serializes a space: always as canonical `generators` rows.
pub fn write_space(space: &FormSpace) -> String {
    let generators = space
        .basis_forms()
        .iter()
        .map(|f| {
            f.coeffs()
                .iter()
                .map(|(m, v)| (m.to_string(), v.to_string()))
                .collect()
        })
        .collect();
    let file = SpaceFile {
        n: space.n(),
        d: space.d(),
        order: order_to_dto(space.order()),
        generators: Some(generators),
        complement_monomials: None,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serializable");
    text.push('\n');
    text
}

/// Parses a space from interchange text.
pub fn read_space(text: &str) -> Result<FormSpace, Error> {
    let file: SpaceFile = serde_json::from_str(text)?;
    if file.n == 0 {
        return Err(Error::InvalidArgument(
            "variable count must be positive".into(),
        ));
    }
    let order = order_from_dto(&file.order, file.n)?;
    match (&file.generators, &file.complement_monomials) {
        (Some(gens), None) => {
            let mut forms = Vec::with_capacity(gens.len());
            for map in gens {
                let mut terms = Vec::with_capacity(map.len());
                for (mtext, vtext) in map {
                    let mono = Monomial::parse(mtext, file.n)?;
                    if mono.degree() != file.d {
                        return Err(Error::DegreeMismatch {
                            expected: file.d,
                            found: mono.degree(),
                        });
                    }
                    let coeff = Rat::from_str(vtext).map_err(|e| Error::Parse {
                        context: vtext.clone(),
                        col: 0,
                        msg: format!("bad rational: {e}"),
                    })?;
                    terms.push((mono, coeff));
                }
                forms.push(Form::from_terms(file.n, file.d, terms)?);
            }
            FormSpace::span(file.n, file.d, &order, &forms)
        }
        (None, Some(monos)) => {
            let mut parsed = Vec::with_capacity(monos.len());
            for mtext in monos {
                let mono = Monomial::parse(mtext, file.n)?;
                if mono.degree() != file.d {
                    return Err(Error::DegreeMismatch {
                        expected: file.d,
                        found: mono.degree(),
                    });
                }
                parsed.push(mono);
            }
            let span = FormSpace::span(
                file.n,
                file.d,
                &order,
                &parsed.into_iter().map(Form::monomial).collect::<Vec<_>>(),
            )?;
            Ok(span.apolar_complement())
        }
        _ => Err(Error::InvalidArgument(
            "exactly one of `generators` and `complement_monomials` required".into(),
        )),
    }
}

pub fn save_space(space: &FormSpace, path: &Path) -> Result<(), Error> {
    std::fs::write(path, write_space(space))?;
    Ok(())
}

pub fn load_space(path: &Path) -> Result<FormSpace, Error> {
    let text = std::fs::read_to_string(path)?;
    read_space(&text)
}
