//! Nested sum-label expansions with cancellation tags.
//!
//! A dissection script names a target triangle and repeatedly expands one
//! piece into the seven pieces of the based construction. Pieces of equal
//! placement and opposite sign can be tagged in pairs; the interpreter
//! removes them after checking they really coincide. What survives —
//! when every remaining piece is positive — is a tiling of the target,
//! and [`verify_perfect`] certifies it cell by cell.
//!
//! Script format (line oriented, `#` starts a comment):
//!
//! ```text
//! target <size> [at <i>,<j>]
//! expand <ref> = <n> <k> <l> <t> [tags <slot>=<tag>(,<slot>=<tag>)*]
//! ```
//!
//! `<ref>` is `root` or a dot path such as `root.kl.nk` naming a piece of
//! a previous expansion; `<slot>` is one of `nk nl kl n k l t`; every tag
//! must occur exactly twice in the script, once on a positive and once on
//! a negative occurrence. Zero-size pieces vanish (the interpreter works
//! in area chains) and can be neither referenced nor tagged.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::chain::{face_chain, geom_check, Chain};
use crate::lattice::{Eq8Layout, LatticeCoord, PlacedTriangle, Slot};
use crate::ring::Sign;
use crate::{Int, Mode};

/// Path from the root target to one piece: the slot chosen at each
/// expansion, in order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PieceRef(pub Vec<Slot>);

impl PieceRef {
    pub fn root() -> Self {
        PieceRef(Vec::new())
    }

    pub fn child(&self, slot: Slot) -> Self {
        let mut path = self.0.clone();
        path.push(slot);
        PieceRef(path)
    }
}

impl fmt::Display for PieceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root")?;
        for s in &self.0 {
            write!(f, ".{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PieceRef {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.split('.');
        if parts.next() != Some("root") {
            return Err(format!("piece reference must start with 'root': {s}"));
        }
        let mut path = Vec::new();
        for p in parts {
            let slot: Slot = p
                .parse()
                .map_err(|()| format!("unknown slot '{p}' in reference {s}"))?;
            path.push(slot);
        }
        Ok(PieceRef(path))
    }
}

/// One expansion: which piece, the four increments, and optional
/// cancellation tags on the produced pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionStep {
    pub target: PieceRef,
    pub params: [Int; 4],
    pub tags: Vec<(Slot, String)>,
    /// 1-based source line, for diagnostics.
    pub line: usize,
}

/// A parsed dissection script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub target_size: Int,
    pub target_anchor: LatticeCoord<Int>,
    pub steps: Vec<ExpansionStep>,
}

/// A position-annotated parse or validation problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

/// Parses and validates a script, collecting every diagnostic it can.
///
/// Validation simulates the expansion tree without geometry: sizes and
/// accumulated signs are enough to reject duplicate expansions, dangling
/// or vanished references, size-mismatched parameters, and tags that do
/// not pair one positive with one negative occurrence.
pub fn parse_script(text: &str) -> Result<Script, Vec<Diagnostic>> {
    let mut diags: Vec<Diagnostic> = Vec::new();
    let mut header: Option<(Int, LatticeCoord<Int>, usize)> = None;
    let mut raw_steps: Vec<ExpansionStep> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut push = |message: String| diags.push(Diagnostic {
            line: line_no,
            message,
        });
        if header.is_none() {
            match parse_target_line(line) {
                Ok((size, anchor)) => header = Some((size, anchor, line_no)),
                Err(e) => {
                    push(e);
                    // cannot validate the rest without a target
                    return Err(diags);
                }
            }
            continue;
        }
        match parse_expand_line(line, line_no) {
            Ok(step) => raw_steps.push(step),
            Err(e) => push(e),
        }
    }

    let Some((target_size, target_anchor, _)) = header else {
        diags.push(Diagnostic {
            line: 1,
            message: "missing 'target <size> [at <i>,<j>]' line".to_string(),
        });
        return Err(diags);
    };

    // Simulated tree: sizes, signs, and leaf bookkeeping.
    struct Node {
        size: Int,
        sign: Sign,
        expanded: bool,
        tagged: Option<String>,
    }
    let mut tree: BTreeMap<PieceRef, Node> = BTreeMap::new();
    tree.insert(
        PieceRef::root(),
        Node {
            size: target_size,
            sign: Sign::Plus,
            expanded: false,
            tagged: None,
        },
    );
    let mut tag_uses: BTreeMap<String, Vec<(usize, Sign)>> = BTreeMap::new();

    for step in &raw_steps {
        let line = step.line;
        let mut push = |message: String| diags.push(Diagnostic { line, message });
        let (size, sign) = match tree.get(&step.target) {
            None => {
                push(format!(
                    "piece {} does not exist (never created, vanished at size 0, or parent not expanded)",
                    step.target
                ));
                continue;
            }
            Some(n) if n.expanded => {
                push(format!("piece {} was already expanded", step.target));
                continue;
            }
            Some(n) => {
                if let Some(tag) = &n.tagged {
                    push(format!(
                        "piece {} carries cancellation tag '{tag}' and must stay unexpanded",
                        step.target
                    ));
                    continue;
                }
                (n.size, n.sign)
            }
        };
        let [n, k, l, t] = step.params;
        if n + k + l + t != size {
            push(format!(
                "parameters {n} {k} {l} {t} sum to {} but piece {} has size {size}",
                n + k + l + t,
                step.target
            ));
            continue;
        }
        tree.get_mut(&step.target).unwrap().expanded = true;
        for slot in Slot::ALL {
            let piece_size = t
                + if slot.has_n() { n } else { 0 }
                + if slot.has_k() { k } else { 0 }
                + if slot.has_l() { l } else { 0 };
            if piece_size == 0 {
                continue; // vanishes in area chains
            }
            let piece_sign = if slot.coefficient() < 0 {
                sign.flip()
            } else {
                sign
            };
            tree.insert(
                step.target.child(slot),
                Node {
                    size: piece_size,
                    sign: piece_sign,
                    expanded: false,
                    tagged: None,
                },
            );
        }
        let mut seen_slots: Vec<Slot> = Vec::new();
        for (slot, tag) in &step.tags {
            if seen_slots.contains(slot) {
                push(format!("slot {slot} tagged twice in one step"));
                continue;
            }
            seen_slots.push(*slot);
            let child = step.target.child(*slot);
            match tree.get_mut(&child) {
                None => push(format!(
                    "tag '{tag}' set on {child}, which vanished at size 0"
                )),
                Some(node) => {
                    node.tagged = Some(tag.clone());
                    tag_uses
                        .entry(tag.clone())
                        .or_default()
                        .push((step.line, node.sign));
                }
            }
        }
    }

    for (tag, uses) in &tag_uses {
        match uses.as_slice() {
            [(line, _)] => diags.push(Diagnostic {
                line: *line,
                message: format!("tag '{tag}' is unpaired (appears once)"),
            }),
            [(_, s1), (line, s2)] => {
                if s1 == s2 {
                    diags.push(Diagnostic {
                        line: *line,
                        message: format!(
                            "tag '{tag}' pairs two {s1} occurrences; one must be positive and one negative"
                        ),
                    });
                }
            }
            many => diags.push(Diagnostic {
                line: many.last().map(|(l, _)| *l).unwrap_or(0),
                message: format!("tag '{tag}' appears {} times (exactly two required)", many.len()),
            }),
        }
    }

    if diags.is_empty() {
        Ok(Script {
            target_size,
            target_anchor,
            steps: raw_steps,
        })
    } else {
        Err(diags)
    }
}

fn parse_target_line(line: &str) -> Result<(Int, LatticeCoord<Int>), String> {
    let mut words = line.split_whitespace();
    if words.next() != Some("target") {
        return Err("script must start with 'target <size> [at <i>,<j>]'".to_string());
    }
    let size: Int = words
        .next()
        .ok_or("missing target size")?
        .parse()
        .map_err(|e| format!("bad target size: {e}"))?;
    let anchor = match words.next() {
        None => LatticeCoord::origin(),
        Some("at") => {
            let coords = words.next().ok_or("missing coordinates after 'at'")?;
            parse_coord(coords)?
        }
        Some(w) => return Err(format!("unexpected token '{w}' after target size")),
    };
    if let Some(w) = words.next() {
        return Err(format!("unexpected trailing token '{w}'"));
    }
    Ok((size, anchor))
}

fn parse_coord(s: &str) -> Result<LatticeCoord<Int>, String> {
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| format!("expected <i>,<j>, got '{s}'"))?;
    let i: Int = i.trim().parse().map_err(|e| format!("bad coordinate: {e}"))?;
    let j: Int = j.trim().parse().map_err(|e| format!("bad coordinate: {e}"))?;
    Ok(LatticeCoord::new(i, j))
}

fn parse_expand_line(line: &str, line_no: usize) -> Result<ExpansionStep, String> {
    let rest = line
        .strip_prefix("expand")
        .ok_or_else(|| format!("expected 'expand' or comment, got '{line}'"))?;
    let (ref_part, rhs) = rest
        .split_once('=')
        .ok_or("expansion needs '= <n> <k> <l> <t>'")?;
    let target: PieceRef = ref_part.trim().parse()?;
    let (params_part, tags_part) = match rhs.find("tags") {
        Some(pos) => (&rhs[..pos], Some(&rhs[pos + 4..])),
        None => (rhs, None),
    };
    let params: Vec<Int> = params_part
        .split_whitespace()
        .map(|w| w.parse::<Int>().map_err(|e| format!("bad parameter '{w}': {e}")))
        .collect::<Result<_, _>>()?;
    let params: [Int; 4] = params
        .try_into()
        .map_err(|v: Vec<Int>| format!("expected 4 parameters, got {}", v.len()))?;
    let mut tags = Vec::new();
    if let Some(tags_str) = tags_part {
        for item in tags_str.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err("empty tag entry".to_string());
            }
            let (slot, tag) = item
                .split_once('=')
                .ok_or_else(|| format!("tag entry '{item}' needs <slot>=<tag>"))?;
            let slot: Slot = slot
                .trim()
                .parse()
                .map_err(|()| format!("unknown slot '{}'", slot.trim()))?;
            let tag = tag.trim();
            let starts_ok = tag
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if !starts_ok || !tag.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(format!("tag '{tag}' is not an identifier"));
            }
            tags.push((slot, tag.to_string()));
        }
    }
    Ok(ExpansionStep {
        target,
        params,
        tags,
        line: line_no,
    })
}

/// The two built-in seven-step dissections of `⟨39⟩` into 15 pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    A,
    B,
}

/// First writing: every expanded piece is upward, the base shrinks by
/// mirrored pieces.
const BUILTIN_A: &str = "\
# 15-piece perfect dissection of the side-39 triangle, first writing
target 39
expand root = 19 12 20 -12 tags n=c1, l=c2
expand root.nl = 11 16 11 -11 tags k=c3
expand root.nl.nk = 7 7 9 -7 tags nk=c1, l=c4
expand root.nl.nk.kl = 2 7 2 -2 tags nl=c4, k=c5
expand root.nl.nk.kl.kl = 5 5 2 -5 tags nk=c5, kl=c7, l=c6
expand root.nl.kl = 8 8 8 -8 tags kl=c2
expand root.nl.kl.nk = 3 5 3 -3 tags nk=c3, k=c7, t=c6
";

/// Second writing of the same dissection: the base piece `⟨−19⟩` is
/// expanded downward through a chain of mirrored pieces.
const BUILTIN_B: &str = "\
# 15-piece perfect dissection of the side-39 triangle, second writing
target 39
expand root = 19 19 20 -19 tags l=c1, nl=c6
expand root.t = -12 -7 -7 7 tags n=c2
expand root.t.nk = -5 -7 -5 5 tags nl=c2, k=c3, nk=c7
expand root.t.nk.kl = -5 -2 -2 2 tags n=c4
expand root.t.nk.kl.nk = -3 -2 -3 3 tags nk=c3, nl=c4, k=c5
expand root.t.nk.kl.nk.kl = -11 9 -11 11 tags k=c6
expand root.t.nk.kl.nk.kl.nk = 8 1 8 -8 tags nk=c5, kl=c1, k=c7
";

pub fn builtin_script(which: Builtin) -> &'static str {
    match which {
        Builtin::A => BUILTIN_A,
        Builtin::B => BUILTIN_B,
    }
}

pub fn builtin(which: Builtin) -> Script {
    parse_script(builtin_script(which)).expect("builtin scripts parse")
}

/// A cancelled pair: the tag and the shared placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cancellation {
    pub tag: String,
    pub tri: PlacedTriangle<Int>,
}

/// Summary numbers of an interpreted dissection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissectionStats {
    pub piece_count: usize,
    /// Signed sizes in piece order.
    pub signed_sizes: Vec<Int>,
    pub sum_squares: Int,
}

/// Outcome of interpreting a script: the surviving pieces (all positive
/// sign, nonzero size), the cancelled pairs, and summary stats.
#[derive(Clone, Debug)]
pub struct DissectionResult {
    pub pieces: Vec<(Sign, PlacedTriangle<Int>)>,
    pub cancellations: Vec<Cancellation>,
    pub stats: DissectionStats,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InterpretError {
    #[error("line {line}: {message}")]
    InvalidScript { line: usize, message: String },
    #[error("line {line}: expansion of {piece} leaves a nonzero chain residual ({residual})")]
    StepResidual {
        line: usize,
        piece: String,
        residual: String,
    },
    #[error("tag '{tag}' pairs {first} with {second}, which do not coincide")]
    CancellationMismatch {
        tag: String,
        first: String,
        second: String,
    },
    #[error("tag '{tag}' pairs two pieces of the same sign at {at}")]
    CancellationSameSign { tag: String, at: String },
}

/// Runs a script, rooting the target at `root_anchor`.
///
/// Each step places the seven construction pieces inside the expanded
/// piece and checks its own chain identity (empty residual) before
/// recursing; tagged pairs must coincide exactly. Zero-size pieces vanish.
pub fn interpret(
    script: &Script,
    root_anchor: LatticeCoord<Int>,
) -> Result<DissectionResult, InterpretError> {
    struct Node {
        tri: PlacedTriangle<Int>,
        sign: Sign,
        expanded: bool,
        tag: Option<(String, usize)>,
        born: usize,
    }
    let mut tree: BTreeMap<PieceRef, Node> = BTreeMap::new();
    let mut birth = 0usize;
    tree.insert(
        PieceRef::root(),
        Node {
            tri: PlacedTriangle::new(root_anchor, script.target_size),
            sign: Sign::Plus,
            expanded: false,
            tag: None,
            born: birth,
        },
    );

    for step in &script.steps {
        let invalid = |message: String| InterpretError::InvalidScript {
            line: step.line,
            message,
        };
        let (tri, sign) = {
            let node = tree
                .get(&step.target)
                .ok_or_else(|| invalid(format!("piece {} does not exist", step.target)))?;
            if node.expanded {
                return Err(invalid(format!("piece {} already expanded", step.target)));
            }
            if let Some((tag, _)) = &node.tag {
                return Err(invalid(format!(
                    "piece {} is tagged '{tag}' and cannot be expanded",
                    step.target
                )));
            }
            (node.tri, node.sign)
        };
        let [n, k, l, t] = step.params;
        let layout = Eq8Layout::for_target(&tri, n, k, l, t)
            .map_err(|e| invalid(e.to_string()))?;

        // the step's own identity, with the parent's accumulated sign
        let signed_terms: Vec<(Int, PlacedTriangle<Int>)> = layout
            .terms()
            .into_iter()
            .map(|(c, p)| (c * sign.value::<Int>(), p))
            .collect();
        let residual = geom_check(&signed_terms, (sign.value(), &tri), Mode::N2);
        if !residual.is_empty() {
            return Err(InterpretError::StepResidual {
                line: step.line,
                piece: step.target.to_string(),
                residual: residual.summary(6),
            });
        }

        tree.get_mut(&step.target).unwrap().expanded = true;
        for slot in Slot::ALL {
            let piece = layout.piece(slot);
            if piece.is_point() {
                continue;
            }
            let piece_sign = if slot.coefficient() < 0 {
                sign.flip()
            } else {
                sign
            };
            birth += 1;
            tree.insert(
                step.target.child(slot),
                Node {
                    tri: piece,
                    sign: piece_sign,
                    expanded: false,
                    tag: None,
                    born: birth,
                },
            );
        }
        for (slot, tag) in &step.tags {
            let child = step.target.child(*slot);
            let node = tree.get_mut(&child).ok_or_else(|| {
                invalid(format!("tag '{tag}' refers to vanished piece {child}"))
            })?;
            node.tag = Some((tag.clone(), step.line));
        }
    }

    // collect leaves; pair up tags
    let mut tagged: BTreeMap<String, Vec<(Sign, PlacedTriangle<Int>)>> = BTreeMap::new();
    let mut survivors: Vec<(usize, Sign, PlacedTriangle<Int>)> = Vec::new();
    for node in tree.values() {
        if node.expanded {
            continue;
        }
        match &node.tag {
            Some((tag, _)) => tagged.entry(tag.clone()).or_default().push((node.sign, node.tri)),
            None => survivors.push((node.born, node.sign, node.tri)),
        }
    }

    let mut cancellations = Vec::new();
    for (tag, mut uses) in tagged {
        if uses.len() != 2 {
            return Err(InterpretError::InvalidScript {
                line: 0,
                message: format!("tag '{tag}' marks {} pieces, need 2", uses.len()),
            });
        }
        uses.sort_by_key(|(s, _)| *s);
        let (s1, t1) = uses[0];
        let (s2, t2) = uses[1];
        if t1 != t2 {
            return Err(InterpretError::CancellationMismatch {
                tag,
                first: t1.to_string(),
                second: t2.to_string(),
            });
        }
        if s1 == s2 {
            return Err(InterpretError::CancellationSameSign {
                tag,
                at: t1.to_string(),
            });
        }
        cancellations.push(Cancellation { tag, tri: t1 });
    }

    survivors.sort_by_key(|(born, _, _)| *born);
    let pieces: Vec<(Sign, PlacedTriangle<Int>)> =
        survivors.into_iter().map(|(_, s, t)| (s, t)).collect();
    let signed_sizes: Vec<Int> = pieces.iter().map(|(_, t)| t.size).collect();
    let sum_squares = signed_sizes.iter().map(|s| s * s).sum();
    let stats = DissectionStats {
        piece_count: pieces.len(),
        signed_sizes,
        sum_squares,
    };
    Ok(DissectionResult {
        pieces,
        cancellations,
        stats,
    })
}

/// Certificate that a dissection result perfectly tiles `target`.
#[derive(Clone, Debug)]
pub struct PerfectReport {
    /// Every surviving piece is material: positive sign, nonzero size.
    pub signs_ok: bool,
    /// The piece chains sum exactly to the target chain.
    pub tiling_ok: bool,
    /// Every covered cell is covered exactly once.
    pub unit_multiplicity_ok: bool,
    /// All signed sizes pairwise distinct (mirror pairs count as distinct).
    pub distinct_ok: bool,
    /// `Σ sizeᵢ² = target.size²`.
    pub squares_ok: bool,
    pub piece_count: usize,
    pub sum_squares: Int,
    pub target_square: Int,
    pub failures: Vec<String>,
}

impl PerfectReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks a dissection result against its target, cell by cell.
///
/// Unit multiplicity of the signed sum only certifies a tiling when every
/// piece is positive, so surviving negative pieces are a failure of their
/// own.
pub fn verify_perfect(r: &DissectionResult, target: &PlacedTriangle<Int>) -> PerfectReport {
    let mut failures = Vec::new();

    let negatives = r
        .pieces
        .iter()
        .filter(|(s, _)| *s == Sign::Minus)
        .count();
    let signs_ok = negatives == 0;
    if !signs_ok {
        failures.push(format!(
            "signs: {negatives} piece(s) survive with negative sign"
        ));
    }

    let mut sum = Chain::new(Mode::N2);
    for (sign, tri) in &r.pieces {
        sum.add_scaled(&face_chain(tri), sign.value());
    }
    let unit_multiplicity_ok = sum.iter().all(|(_, m)| *m == 1);
    if !unit_multiplicity_ok {
        let worst = sum
            .iter()
            .find(|(_, m)| **m != 1)
            .map(|(id, m)| format!("{:?}{} has multiplicity {}", id.kind, id.at, m))
            .unwrap_or_default();
        failures.push(format!("multiplicity: {worst}"));
    }
    let mut residual = sum;
    residual.add_scaled(&face_chain(target), -1);
    let tiling_ok = residual.is_empty();
    if !tiling_ok {
        failures.push(format!(
            "tiling: residual against {target} is {}",
            residual.summary(6)
        ));
    }

    let mut sizes: Vec<Int> = r.pieces.iter().map(|(_, t)| t.size).collect();
    sizes.sort_unstable();
    let distinct_ok = sizes.windows(2).all(|w| w[0] != w[1]);
    if !distinct_ok {
        let dup = sizes.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
        failures.push(format!("distinctness: size {dup} appears more than once"));
    }

    let sum_squares = r.stats.sum_squares;
    let target_square = target.size * target.size;
    let squares_ok = sum_squares == target_square;
    if !squares_ok {
        failures.push(format!(
            "area: piece squares sum to {sum_squares}, target needs {target_square}"
        ));
    }

    PerfectReport {
        signs_ok,
        tiling_ok,
        unit_multiplicity_ok,
        distinct_ok,
        squares_ok,
        piece_count: r.pieces.len(),
        sum_squares,
        target_square,
        failures,
    }
}
