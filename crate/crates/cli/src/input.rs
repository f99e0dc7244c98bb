use std::fs;
use std::path::Path;
use std::sync::Arc;

use bsdh_core::intersect::DivisorSpec;
use bsdh_core::rootsys::{NamedType, RootSystemSpec};
use bsdh_core::word::WordSpec;
use bsdh_core::{AdmissibleSeq, DivisorClass, Family, RootSystem, Word};
use serde::Deserialize;

use crate::Failure;

/// Everything a command may need, resolved and validated.
pub struct Input {
    pub rs: Arc<RootSystem>,
    pub word: Word,
    pub seq: Option<AdmissibleSeq>,
    pub divisor: Option<DivisorClass>,
}

/// A single JSON document carrying every input at once.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(rename = "type")]
    named: Option<NamedType>,
    cartan: Option<Vec<Vec<i64>>>,
    word: Vec<usize>,
    #[serde(default)]
    seq: Option<Vec<usize>>,
    #[serde(default)]
    divisor: Option<DivisorClass>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CartanFile {
    Spec(RootSystemSpec),
    Bare(Vec<Vec<i64>>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DivisorFile {
    Wrapped(DivisorSpec),
    Bare(DivisorClass),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WordFile {
    Wrapped(WordSpec),
    Bare(Vec<usize>),
}

pub struct Sources<'a> {
    pub input: Option<&'a Path>,
    pub named: Option<&'a [String]>,
    pub cartan: Option<&'a str>,
    pub word: Option<&'a str>,
    pub seq: Option<&'a str>,
    pub divisor: Option<&'a str>,
}

pub fn load(src: &Sources<'_>) -> Result<Input, Failure> {
    if let Some(path) = src.input {
        if src.named.is_some() || src.cartan.is_some() || src.word.is_some() {
            return Err(Failure::usage("--input cannot be combined with --type, --cartan or --word"));
        }
        let doc: Document = parse_json(&read(path.to_str().unwrap_or_default())?)?;
        let spec = RootSystemSpec {
            named: doc.named,
            cartan: doc.cartan,
        };
        let rs = Arc::new(spec.build()?);
        let word = Word::new(Arc::clone(&rs), &doc.word)?;
        let seq = match src.seq {
            Some(s) => Some(parse_seq(s, &word)?),
            None => doc.seq.map(|p| AdmissibleSeq::new(p, word.len())).transpose()?,
        };
        let divisor = match src.divisor {
            Some(d) => Some(load_divisor(d)?),
            None => doc.divisor,
        };
        return Ok(Input { rs, word, seq, divisor });
    }

    let rs = match (src.named, src.cartan) {
        (Some(t), None) => named_type(t)?,
        (None, Some(c)) => load_cartan(c)?,
        (Some(_), Some(_)) => return Err(Failure::usage("give only one of --type and --cartan")),
        (None, None) => return Err(Failure::usage("missing root system: pass --type, --cartan or --input")),
    };
    let rs = Arc::new(rs);
    let roots = match src.word {
        Some(w) => parse_word(w)?,
        None => return Err(Failure::usage("missing --word")),
    };
    let word = Word::new(Arc::clone(&rs), &roots)?;
    let seq = src.seq.map(|s| parse_seq(s, &word)).transpose()?;
    let divisor = src.divisor.map(load_divisor).transpose()?;
    Ok(Input { rs, word, seq, divisor })
}

/// Accepts `A2`, `A 2` as one argument, or `A` and `2` as two.
fn named_type(args: &[String]) -> Result<RootSystem, Failure> {
    let joined: String = args.concat().chars().filter(|c| !c.is_whitespace()).collect();
    let mut chars = joined.chars();
    let letter = chars.next().ok_or_else(|| Failure::usage("empty --type"))?;
    let family = Family::from_letter(letter.to_ascii_uppercase())
        .ok_or_else(|| Failure::usage(format!("unknown family {letter:?} in --type")))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Failure::usage(format!("bad rank in --type {joined:?}")))?;
    Ok(RootSystem::named(family, rank)?)
}

fn read(arg: &str) -> Result<String, Failure> {
    fs::read_to_string(arg).map_err(|e| Failure::usage(format!("cannot read {arg}: {e}")))
}

/// Inline JSON when the argument starts with `{` or `[`, otherwise a file.
fn read_inline_or_file(arg: &str) -> Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(arg.to_string())
    } else {
        read(arg)
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::usage(format!("malformed JSON: {e}")))
}

fn load_cartan(arg: &str) -> Result<RootSystem, Failure> {
    let spec = match parse_json(&read_inline_or_file(arg)?)? {
        CartanFile::Spec(spec) => spec,
        CartanFile::Bare(m) => RootSystemSpec {
            named: None,
            cartan: Some(m),
        },
    };
    Ok(spec.build()?)
}

fn load_divisor(arg: &str) -> Result<DivisorClass, Failure> {
    Ok(match parse_json(&read_inline_or_file(arg)?)? {
        DivisorFile::Wrapped(spec) => spec.divisor,
        DivisorFile::Bare(d) => d,
    })
}

/// A comma-separated list, a JSON array, or a `{"word": [...]}` file.
fn parse_word(arg: &str) -> Result<Vec<usize>, Failure> {
    let t = arg.trim();
    if t.starts_with('{') || t.starts_with('[') || Path::new(t).is_file() {
        return Ok(match parse_json(&read_inline_or_file(t)?)? {
            WordFile::Wrapped(w) => w.word,
            WordFile::Bare(v) => v,
        });
    }
    parse_csv(t, "--word")
}

fn parse_seq(arg: &str, w: &Word) -> Result<AdmissibleSeq, Failure> {
    Ok(AdmissibleSeq::new(parse_csv(arg, "--seq")?, w.len())?)
}

fn parse_csv(arg: &str, flag: &str) -> Result<Vec<usize>, Failure> {
    let t = arg.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::usage(format!("{flag}: {:?} is not a nonnegative integer", s.trim())))
        })
        .collect()
}
