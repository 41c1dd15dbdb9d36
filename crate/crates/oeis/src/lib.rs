//! OEIS b-file client. Terms come from the network when allowed, otherwise
//! from an on-disk cache, otherwise from fixtures compiled into the crate.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigInt;
use qpolyber::families::classical_pb_negk;
use qpolyber::verify::{CheckReport, Params, Status};
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("malformed OEIS id {0:?}; expected A followed by six digits")]
    MalformedId(String),
    #[error("sequence {0} not found")]
    NotFound(String),
    #[error("network error: {0}")]
    Network(String),
    #[error("cache error: {0}")]
    Cache(#[from] std::io::Error),
    #[error("bad b-file line {line}: {text:?}")]
    Parse { line: usize, text: String },
}

pub type Result<T> = std::result::Result<T, OeisError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OeisId(u32);

impl OeisId {
    pub fn number(self) -> u32 {
        self.0
    }

    /// `b099594.txt`
    pub fn bfile_name(self) -> String {
        format!("b{:06}.txt", self.0)
    }

    pub fn bfile_url(self) -> String {
        format!("https://oeis.org/{self}/{}", self.bfile_name())
    }
}

impl FromStr for OeisId {
    type Err = OeisError;
    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix('A').filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()));
        match digits {
            Some(d) => Ok(OeisId(d.parse().expect("six digits"))),
            None => Err(OeisError::MalformedId(s.into())),
        }
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Remote,
    Cache,
    Bundled,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Remote => "remote",
            Source::Cache => "cache",
            Source::Bundled => "bundled",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFixture {
    pub id: OeisId,
    pub terms: Vec<BigInt>,
    pub source: Source,
}

/// How a two-dimensional array is flattened into a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reader {
    /// `(0,0), (0,1), (1,0), (0,2), (1,1), (2,0), ...`
    Antidiagonal,
    /// Row by row over the smallest square holding `bound` terms.
    Rows,
}

impl FromStr for Reader {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "antidiagonal" => Ok(Reader::Antidiagonal),
            "row" | "rows" => Ok(Reader::Rows),
            _ => Err(format!("unknown reader {s:?}; expected antidiagonal or row")),
        }
    }
}

impl Reader {
    /// `(n, k)` cells of the first `bound` terms.
    pub fn cells(self, bound: usize) -> Vec<(usize, usize)> {
        match self {
            Reader::Antidiagonal => (0..)
                .flat_map(|d| (0..=d).map(move |n| (n, d - n)))
                .take(bound)
                .collect(),
            Reader::Rows => {
                let side = (0..).find(|s| s * s >= bound).unwrap_or(0);
                (0..side).flat_map(|n| (0..side).map(move |k| (n, k))).take(bound).collect()
            }
        }
    }
}

pub trait Transport {
    /// Body of a successful GET; `Ok(None)` for a 404.
    fn get(&self, url: &str) -> Result<Option<String>>;
}

pub struct UreqTransport {
    agent: ureq::Agent,
}

impl Default for UreqTransport {
    fn default() -> Self {
        let agent = ureq::AgentBuilder::new().timeout(Duration::from_secs(15)).build();
        UreqTransport { agent }
    }
}

impl Transport for UreqTransport {
    fn get(&self, url: &str) -> Result<Option<String>> {
        match self.agent.get(url).call() {
            Ok(resp) => resp.into_string().map(Some).map_err(|e| OeisError::Network(e.to_string())),
            Err(ureq::Error::Status(404, _)) => Ok(None),
            Err(e) => Err(OeisError::Network(e.to_string())),
        }
    }
}

const BUNDLED: &[(u32, &str)] = &[(99594, include_str!("../fixtures/b099594.txt"))];

pub fn bundled_text(id: OeisId) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == id.0).map(|(_, t)| *t)
}

/// The `# reader:` line of a bundled fixture.
pub fn bundled_reader(id: OeisId) -> Option<Reader> {
    bundled_text(id)?
        .lines()
        .filter_map(|l| l.strip_prefix("# reader:"))
        .find_map(|r| r.trim().parse().ok())
}

/// Parses b-file text: `index value` per line, `#` comments.
pub fn parse_bfile(text: &str) -> Result<Vec<BigInt>> {
    let mut terms = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value = line
            .split_whitespace()
            .nth(1)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| OeisError::Parse { line: i + 1, text: line.into() })?;
        terms.push(value);
    }
    Ok(terms)
}

/// `QPB_CACHE_DIR`, else the platform cache dir plus `qpb`.
pub fn default_cache_dir() -> PathBuf {
    match std::env::var_os("QPB_CACHE_DIR") {
        Some(d) if !d.is_empty() => PathBuf::from(d),
        _ => dirs::cache_dir().unwrap_or_else(std::env::temp_dir).join("qpb"),
    }
}

pub struct OeisClient {
    transport: Box<dyn Transport>,
    cache_dir: PathBuf,
}

impl Default for OeisClient {
    fn default() -> Self {
        OeisClient::new(Box::new(UreqTransport::default()), default_cache_dir())
    }
}

impl OeisClient {
    pub fn new(transport: Box<dyn Transport>, cache_dir: PathBuf) -> Self {
        OeisClient { transport, cache_dir }
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    pub fn cache_path(&self, id: OeisId) -> PathBuf {
        self.cache_dir.join(id.bfile_name())
    }

    /// Offline: cache then bundled. Online: remote (cached on success), then
    /// cache, then bundled.
    pub fn fetch_sequence(&self, id: OeisId, offline: bool) -> Result<SequenceFixture> {
        let mut network_error = None;
        if !offline {
            match self.transport.get(&id.bfile_url()) {
                Ok(Some(body)) => {
                    let terms = parse_bfile(&body)?;
                    if !terms.is_empty() {
                        self.write_cache(id, &body)?;
                        return Ok(SequenceFixture { id, terms, source: Source::Remote });
                    }
                }
                Ok(None) => {}
                Err(e) => network_error = Some(e),
            }
        }
        if let Some(terms) = self.read_cache(id)? {
            return Ok(SequenceFixture { id, terms, source: Source::Cache });
        }
        if let Some(text) = bundled_text(id) {
            return Ok(SequenceFixture { id, terms: parse_bfile(text)?, source: Source::Bundled });
        }
        Err(network_error.unwrap_or_else(|| OeisError::NotFound(id.to_string())))
    }

    fn read_cache(&self, id: OeisId) -> Result<Option<Vec<BigInt>>> {
        match fs::read_to_string(self.cache_path(id)) {
            Ok(text) => {
                let terms = parse_bfile(&text)?;
                Ok((!terms.is_empty()).then_some(terms))
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    // write then rename so readers never see a partial file
    fn write_cache(&self, id: OeisId, body: &str) -> Result<()> {
        fs::create_dir_all(&self.cache_dir)?;
        let tmp = self.cache_dir.join(format!(".{}.{}", id.bfile_name(), std::process::id()));
        fs::File::create(&tmp)?.write_all(body.as_bytes())?;
        fs::rename(&tmp, self.cache_path(id))?;
        Ok(())
    }

    pub fn crosscheck_table(&self, id: OeisId, reader: Reader, bound: usize, offline: bool) -> Result<CheckReport> {
        Ok(crosscheck_terms(&self.fetch_sequence(id, offline)?, reader, bound))
    }
}

/// Compares the first `bound` terms with `B_n^{(-k)}` laid out by `reader`.
/// `parameters.n` carries the number of terms compared.
pub fn crosscheck_terms(fixture: &SequenceFixture, reader: Reader, bound: usize) -> CheckReport {
    let bound = bound.min(fixture.terms.len());
    let mismatch = reader
        .cells(bound)
        .into_iter()
        .zip(&fixture.terms)
        .enumerate()
        .find(|(_, ((n, k), t))| classical_pb_negk(*n, *k) != **t);
    let witness = mismatch.map(|(index, ((n, k), t))| {
        json!({
            "index": index,
            "n": n,
            "k": k,
            "expected": classical_pb_negk(n, k).to_string(),
            "fixture": t.to_string(),
            "source": fixture.source.to_string(),
        })
    });
    CheckReport {
        check_id: format!("oeis.{}", fixture.id),
        parameters: Params::n(bound),
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
    }
}
