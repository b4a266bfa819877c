//! Process-wide memo of the expensive series, so sweeps over several primes
//! build each one once. A cached series with higher precision serves any
//! smaller request.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::hurwitz::HurwitzTable;
use crate::mocktheta::series_by_name;
use crate::series::{rank_build, QSeries, RankKind, RankSeries};

type Slot<V> = Arc<Mutex<Option<Arc<V>>>>;
type Memo<K, V> = OnceLock<Mutex<HashMap<K, Slot<V>>>>;

static SERIES: Memo<String, QSeries> = OnceLock::new();
static RANK: Memo<bool, RankSeries> = OnceLock::new();
static HURWITZ: Memo<(), HurwitzTable> = OnceLock::new();

/// Each key has its own lock, held while building, so concurrent callers
/// wait for one build instead of repeating it.
fn lookup<K, V>(
    memo: &Memo<K, V>,
    key: K,
    fits: impl Fn(&V) -> bool,
    build: impl FnOnce() -> Result<V>,
) -> Result<Arc<V>>
where
    K: std::hash::Hash + Eq,
{
    let slot = {
        let mut map = memo.get_or_init(Default::default).lock().unwrap();
        Arc::clone(map.entry(key).or_default())
    };
    let mut guard = slot.lock().unwrap();
    if let Some(v) = guard.as_ref() {
        if fits(v) {
            return Ok(Arc::clone(v));
        }
    }
    let v = Arc::new(build()?);
    *guard = Some(Arc::clone(&v));
    Ok(v)
}

/// A named one-variable series (see [`series_by_name`]) to at least `prec`.
pub fn series(name: &str, prec: i64) -> Result<Arc<QSeries>> {
    lookup(
        &SERIES,
        name.to_string(),
        |s| s.precision() >= prec,
        || series_by_name(name, prec),
    )
}

pub fn rank(kind: RankKind, prec: i64) -> Result<Arc<RankSeries>> {
    lookup(
        &RANK,
        kind == RankKind::U,
        |s| s.precision() >= prec,
        || Ok(rank_build(kind, prec)),
    )
}

/// `12 H(N)` for all `N <= nmax`.
pub fn hurwitz(nmax: u64) -> Arc<HurwitzTable> {
    lookup(
        &HURWITZ,
        (),
        |t| t.max() >= nmax,
        || Ok(HurwitzTable::new(nmax)),
    )
    .expect("table build is infallible")
}
