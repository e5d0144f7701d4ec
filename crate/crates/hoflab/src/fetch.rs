//! B-file lookup in the shipped fixtures and a local cache, with optional
//! download from oeis.org.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use hoflab_core::oeis::{normalize_id, parse_bfile, BFile, BFileError};

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "HOFLAB_CACHE_DIR";
/// Environment variable overriding the fixture directory.
pub const FIXTURE_ENV: &str = "HOFLAB_FIXTURE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Fixtures and cache only.
    #[default]
    Offline,
    /// Download on a local miss and store the result in the cache.
    Online,
}

#[derive(Debug, thiserror::Error)]
pub enum FetchError {
    #[error(
        "fixture missing for {id} (looked in {searched:?}); rerun with --online to download it"
    )]
    FixtureMissing { id: String, searched: Vec<PathBuf> },
    #[error("fetching {id} failed: {reason}")]
    Network { id: String, reason: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: BFileError },
    #[error(transparent)]
    InvalidId(BFileError),
}

/// Minimal HTTP GET, replaceable in tests.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<String, String>;
}

pub struct HttpTransport {
    agent: ureq::Agent,
}

impl Default for HttpTransport {
    fn default() -> Self {
        HttpTransport {
            agent: ureq::AgentBuilder::new()
                .timeout(Duration::from_secs(30))
                .build(),
        }
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<String, String> {
        self.agent
            .get(url)
            .call()
            .map_err(|e| e.to_string())?
            .into_string()
            .map_err(|e| e.to_string())
    }
}

/// `A002251` → `b002251.txt`.
pub fn bfile_name(id: &str) -> String {
    format!("b{}.txt", &id[1..])
}

/// Standard download location for a b-file.
pub fn bfile_url(id: &str) -> String {
    format!("https://oeis.org/{id}/{}", bfile_name(id))
}

/// Fixtures shipped with the crate.
pub fn default_fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")))
}

/// `$HOFLAB_CACHE_DIR`, else the platform cache directory plus `hoflab`.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .or_else(|| dirs::cache_dir().map(|d| d.join("hoflab")))
        .unwrap_or_else(|| std::env::temp_dir().join("hoflab-cache"))
}

pub struct BFileStore {
    fixture_dir: Option<PathBuf>,
    cache_dir: PathBuf,
    transport: Box<dyn Transport>,
}

impl BFileStore {
    pub fn new(
        fixture_dir: Option<PathBuf>,
        cache_dir: PathBuf,
        transport: Box<dyn Transport>,
    ) -> Self {
        BFileStore {
            fixture_dir,
            cache_dir,
            transport,
        }
    }

    /// Default fixture and cache directories with the real HTTP client.
    pub fn from_env() -> Self {
        Self::new(
            Some(default_fixture_dir()),
            default_cache_dir(),
            Box::new(HttpTransport::default()),
        )
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    fn local_paths(&self, id: &str) -> Vec<PathBuf> {
        let name = bfile_name(id);
        self.fixture_dir
            .iter()
            .map(|d| d.join(&name))
            .chain(std::iter::once(self.cache_dir.join(&name)))
            .collect()
    }

    /// Fixture first, then cache; the network only in online mode on a miss.
    pub fn fetch(&self, id: &str, mode: Mode) -> Result<BFile, FetchError> {
        let id = normalize_id(id).map_err(FetchError::InvalidId)?;
        let searched = self.local_paths(&id);
        for path in &searched {
            match fs::read_to_string(path) {
                Ok(text) => {
                    return parse_bfile(&id, &text).map_err(|source| FetchError::Parse {
                        path: path.clone(),
                        source,
                    })
                }
                Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                Err(source) => {
                    return Err(FetchError::Io {
                        path: path.clone(),
                        source,
                    })
                }
            }
        }
        if mode == Mode::Offline {
            return Err(FetchError::FixtureMissing { id, searched });
        }
        let text = self
            .transport
            .get(&bfile_url(&id))
            .map_err(|reason| FetchError::Network {
                id: id.clone(),
                reason,
            })?;
        let target = self.cache_dir.join(bfile_name(&id));
        let bfile = parse_bfile(&id, &text).map_err(|source| FetchError::Parse {
            path: target.clone(),
            source,
        })?;
        self.store(&target, &text)?;
        Ok(bfile)
    }

    // Write-then-rename so concurrent readers never see a partial file.
    fn store(&self, target: &Path, text: &str) -> Result<(), FetchError> {
        let io_err = |source| FetchError::Io {
            path: target.to_path_buf(),
            source,
        };
        fs::create_dir_all(&self.cache_dir).map_err(io_err)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.cache_dir).map_err(io_err)?;
        tmp.write_all(text.as_bytes()).map_err(io_err)?;
        tmp.persist(target).map_err(|e| io_err(e.error))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Arc;

    struct Canned {
        calls: Arc<AtomicUsize>,
        body: Option<&'static str>,
    }

    impl Transport for Canned {
        fn get(&self, _url: &str) -> Result<String, String> {
            self.calls.fetch_add(1, Ordering::SeqCst);
            self.body
                .map(String::from)
                .ok_or_else(|| "unreachable".into())
        }
    }

    fn store(dir: &Path, body: Option<&'static str>) -> (BFileStore, Arc<AtomicUsize>) {
        let calls = Arc::new(AtomicUsize::new(0));
        let transport = Canned {
            calls: calls.clone(),
            body,
        };
        (
            BFileStore::new(None, dir.to_path_buf(), Box::new(transport)),
            calls,
        )
    }

    #[test]
    fn urls() {
        assert_eq!(bfile_url("A002251"), "https://oeis.org/A002251/b002251.txt");
    }

    #[test]
    fn offline_miss_is_explicit() {
        let dir = tempfile::tempdir().unwrap();
        let (s, calls) = store(dir.path(), Some("1 1\n"));
        let err = s.fetch("A000000", Mode::Offline).unwrap_err();
        assert!(matches!(err, FetchError::FixtureMissing { .. }));
        assert!(err.to_string().contains("fixture missing"));
        assert_eq!(calls.load(Ordering::SeqCst), 0);
    }

    #[test]
    fn online_fills_cache_then_hits_it() {
        let dir = tempfile::tempdir().unwrap();
        let body = "# test\n0 0\n1 2\n2 1\n";
        let (s, calls) = store(dir.path(), Some(body));
        let first = s.fetch("A002251", Mode::Online).unwrap();
        assert_eq!(calls.load(Ordering::SeqCst), 1);
        let cached = fs::read_to_string(dir.path().join("b002251.txt")).unwrap();
        assert_eq!(cached, body);
        let second = s.fetch("A002251", Mode::Online).unwrap();
        assert_eq!(calls.load(Ordering::SeqCst), 1);
        assert_eq!(first, second);
        assert_eq!(s.fetch("A002251", Mode::Offline).unwrap(), first);
    }

    #[test]
    fn network_failure_without_cache() {
        let dir = tempfile::tempdir().unwrap();
        let (s, _) = store(dir.path(), None);
        assert!(matches!(
            s.fetch("A002251", Mode::Online),
            Err(FetchError::Network { .. })
        ));
    }

    #[test]
    fn shipped_fixtures_parse() {
        let s = BFileStore::new(
            Some(default_fixture_dir()),
            tempfile::tempdir().unwrap().path().to_path_buf(),
            Box::new(HttpTransport::default()),
        );
        let b = s.fetch("A002251", Mode::Offline).unwrap();
        assert_eq!((b.offset(), b.len()), (0, 1000));
    }
}
