"""Performance measurements: dataset ingest, transpile latency, and scaling.

The timing protocol is fixed: 120 runs per measurement, the first 20
discarded as warmup, and mean, standard deviation, and 95th percentile
reported over the rest. The scaling study compiles generated queries of
growing selection size and fits a straight line through the means; a
wide/deep query pair of equal size checks that nesting depth does not
change the cost class.
"""

from __future__ import annotations

import statistics
import tempfile
import time
from pathlib import Path
from typing import Any, Callable

from .datasets import movielens_schema, write_ml100k_fixture
from .engine import GraphStore, run_request
from .frontend import expand, parse_request
from .ir import serialize
from .schema import GraphSchema
from .synth import synthesize
from .transpiler import compile_tree, transpile_request

RUNS = 120
WARMUP = 20
LINEAR_SIZES = (10, 50, 100, 500, 1000)
PAIR_DEPTH = 100  # the deep half of the equal-size pair

SIMPLE_LOOKUP = """
query SimpleLookup {
  movieList(where: { title_EQ: "Toy Story (1995)" }) {
    id
    releaseDate
    imdbUrl
  }
}
"""

COMPLEX_FILTER = """
query ComplexFilter {
  userList(
    where: { AND: [{ age_GT: 18 }, { gender_EQ: "M" }] }
    orderBy: [{ property: age, order: DESC }]
    pagination: { offset: 0, limit: 10 }
  ) {
    userId
    age
  }
}
"""

USER_RATINGS = """
query UserRatings {
  user(id: "<user_graph_id>") {
    userId
    ratedOut(pagination: { offset: 0, limit: 5 }) {
      rating
      movie {
        title
      }
    }
  }
}
"""

GENRE_DEMOGRAPHICS = """
query GenreDemographics {
  genre(id: "<genre_graph_id>") {
    name
    hasGenreIn(pagination: { offset: 0, limit: 3 }) {
      movie {
        title
        ratedIn(
          whereEdge: { rating_GTE: 4 }
          pagination: { offset: 0, limit: 5 }
        ) {
          user {
            age
            worksAsOut {
              occupation {
                name
              }
            }
          }
        }
      }
    }
  }
}
"""

# query name -> text; single lookups carry a placeholder graph id that
# callers substitute with a real one before execution
WORKLOAD: dict[str, str] = {
    "SimpleLookup": SIMPLE_LOOKUP,
    "ComplexFilter": COMPLEX_FILTER,
    "UserRatings": USER_RATINGS,
    "GenreDemographics": GENRE_DEMOGRAPHICS,
}


# -- MovieLens 100k ingest ---------------------------------------------------

def ingest_movielens(directory: str | Path, store: GraphStore) -> dict[str, Any]:
    """Load the five MovieLens 100k files into a graph store.

    Writes vertices and edges through the store API directly rather than
    through generated mutations; one bulk load of 100k ratings does not
    need per-row request parsing. Non-numeric zip codes are normalized
    to -1 so the column fits its declared Int datatype; the count of
    normalized rows is reported.
    """
    directory = Path(directory)
    started = time.perf_counter()

    genre_ids: dict[int, int] = {}
    with open(directory / "u.genre", encoding="latin-1") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            name, _, number = line.rpartition("|")
            vertex = store.add_vertex("Genre", {"genreId": int(number), "name": name})
            genre_ids[int(number)] = vertex.id

    occupation_ids: dict[str, int] = {}
    with open(directory / "u.occupation", encoding="latin-1") as fh:
        for index, line in enumerate(fh):
            name = line.strip()
            if not name:
                continue
            vertex = store.add_vertex("Occupation", {"occupationId": index, "name": name})
            occupation_ids[name] = vertex.id

    user_ids: dict[int, int] = {}
    normalized_zips = 0
    works_as = 0
    with open(directory / "u.user", encoding="latin-1") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            uid, age, gender, occupation, zip_code = line.split("|")
            try:
                zip_value = int(zip_code)
            except ValueError:
                zip_value = -1
                normalized_zips += 1
            vertex = store.add_vertex("User", {
                "userId": int(uid), "age": int(age),
                "gender": gender, "zipCode": zip_value,
            })
            user_ids[int(uid)] = vertex.id
            if occupation in occupation_ids:
                store.add_edge("worksAs", vertex.id, occupation_ids[occupation])
                works_as += 1

    movie_ids: dict[int, int] = {}
    has_genre = 0
    with open(directory / "u.item", encoding="latin-1") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("|")
            mid, title, release, _video, url = fields[:5]
            properties: dict[str, Any] = {"movieId": int(mid), "title": title}
            if release:
                properties["releaseDate"] = release
            if url:
                properties["imdbUrl"] = url
            vertex = store.add_vertex("Movie", properties)
            movie_ids[int(mid)] = vertex.id
            for genre_number, flag in enumerate(fields[5:]):
                if flag == "1":
                    store.add_edge("hasGenre", vertex.id, genre_ids[genre_number])
                    has_genre += 1

    ratings = 0
    with open(directory / "u.data", encoding="latin-1") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            uid, mid, rating, timestamp = line.split("\t")
            store.add_edge("rated", user_ids[int(uid)], movie_ids[int(mid)], {
                "rating": int(rating), "timestamp": timestamp,
            })
            ratings += 1

    return {
        "vertices": {
            "Genre": len(genre_ids),
            "Occupation": len(occupation_ids),
            "User": len(user_ids),
            "Movie": len(movie_ids),
        },
        "edges": {"hasGenre": has_genre, "worksAs": works_as, "rated": ratings},
        "normalized_zip_codes": normalized_zips,
        "seconds": time.perf_counter() - started,
    }


# -- timing ------------------------------------------------------------------

def measure(fn: Callable[[], Any], runs: int = RUNS, warmup: int = WARMUP) -> dict[str, float]:
    """Time fn per the protocol; all figures in milliseconds."""
    samples = []
    for _ in range(runs):
        started = time.perf_counter()
        fn()
        samples.append((time.perf_counter() - started) * 1000.0)
    kept = sorted(samples[warmup:])
    rank = max(0, -(-95 * len(kept) // 100) - 1)  # nearest-rank p95
    return {
        "mean_ms": statistics.fmean(kept),
        "std_ms": statistics.stdev(kept) if len(kept) > 1 else 0.0,
        "p95_ms": kept[rank],
        "runs": len(kept),
    }


# -- scaling study -----------------------------------------------------------

def scaling_schema(width: int = 1000) -> GraphSchema:
    """One vertex type with many optional columns and a self edge."""
    return GraphSchema.from_dict({
        "vertices": [{
            "id": "item",
            "label": "Item",
            "properties": [
                {"key": f"p{i}", "datatype": "Int", "required": False}
                for i in range(1, width + 1)
            ],
        }],
        "edges": [{
            "id": "next", "label": "next",
            "source": "item", "target": "item", "properties": [],
        }],
    })


def wide_query(size: int) -> str:
    """size property selections side by side: S = size, D = 0."""
    fields = " ".join(f"p{i}" for i in range(1, size + 1))
    return "{ itemList { %s } }" % fields


def deep_query(levels: int) -> str:
    """A chain of nested hops: S = 3 * levels + 1, D = levels."""
    inner = f"p{levels + 1}"
    for level in range(levels, 0, -1):
        inner = "nextOut { item { p%d %s } }" % (level, inner)
    # innermost level carries two properties so every level adds exactly 3 nodes
    return "{ itemList { %s } }" % inner


def scaling_report(runs: int = RUNS, warmup: int = WARMUP) -> dict[str, Any]:
    doc = synthesize(scaling_schema())

    sizes = []
    means = []
    points = []
    for size in LINEAR_SIZES:
        text = wide_query(size)
        result = transpile_request(text, doc)
        assert result.counters.s == size
        stats = measure(lambda: transpile_request(text, doc), runs, warmup)
        sizes.append(size)
        means.append(stats["mean_ms"])
        points.append({"s": size, **stats})

    fit = statistics.linear_regression(sizes, means)
    r_squared = statistics.correlation(sizes, means) ** 2

    deep_text = deep_query(PAIR_DEPTH)
    pair_size = 3 * PAIR_DEPTH + 1
    wide_text = wide_query(pair_size)
    deep_counters = transpile_request(deep_text, doc).counters
    wide_counters = transpile_request(wide_text, doc).counters
    assert deep_counters.s == wide_counters.s == pair_size
    assert deep_counters.d == PAIR_DEPTH and wide_counters.d == 0
    deep_stats = measure(lambda: transpile_request(deep_text, doc), runs, warmup)
    wide_stats = measure(lambda: transpile_request(wide_text, doc), runs, warmup)
    slower = max(deep_stats["mean_ms"], wide_stats["mean_ms"])
    faster = min(deep_stats["mean_ms"], wide_stats["mean_ms"])

    return {
        "points": points,
        "slope_ms_per_node": fit.slope,
        "intercept_ms": fit.intercept,
        "r_squared": r_squared,
        "pair": {
            "s": pair_size,
            "wide": {"d": 0, **wide_stats},
            "deep": {"d": PAIR_DEPTH, **deep_stats},
            "ratio": slower / faster,
        },
    }


# -- phase split -------------------------------------------------------------

def phase_report(runs: int = RUNS, warmup: int = WARMUP) -> dict[str, Any]:
    """Where transpile time goes, measured on the heaviest workload query."""
    doc = synthesize(movielens_schema())
    text = GENRE_DEMOGRAPHICS
    parsed = parse_request(text)
    tree = expand(parsed, doc)
    compiled = compile_tree(tree)

    phases = {
        "parse": measure(lambda: parse_request(text), runs, warmup),
        "expand": measure(lambda: expand(parsed, doc), runs, warmup),
        "compile": measure(lambda: compile_tree(tree), runs, warmup),
        "serialize": measure(lambda: serialize(compiled.steps), runs, warmup),
    }
    total = sum(stats["mean_ms"] for stats in phases.values())
    return {
        "query": "GenreDemographics",
        "phases": {
            name: {**stats, "share_pct": 100.0 * stats["mean_ms"] / total}
            for name, stats in phases.items()
        },
        "total_ms": total,
    }


# -- full run ----------------------------------------------------------------

def run_bench(data_dir: str | Path | None = None, runs: int = RUNS,
              warmup: int = WARMUP) -> dict[str, Any]:
    """Ingest the review dataset and measure the full latency suite."""
    if data_dir is None:
        data_dir = tempfile.mkdtemp(prefix="ml100k-")
    data_dir = Path(data_dir)
    if not (data_dir / "u.data").exists():
        write_ml100k_fixture(data_dir)

    schema = movielens_schema()
    doc = synthesize(schema)
    store = GraphStore()
    ingest = ingest_movielens(data_dir, store)

    user_rows = run_request(store, doc, "{ userList(where: {userId_EQ: 1}) { id } }")
    genre_rows = run_request(store, doc, '{ genreList(where: {name_EQ: "Comedy"}) { id } }')
    placeholders = {
        "<user_graph_id>": user_rows["data"]["userList"][0]["id"],
        "<genre_graph_id>": genre_rows["data"]["genreList"][0]["id"],
    }

    workload: dict[str, Any] = {}
    for name, text in WORKLOAD.items():
        for placeholder, graph_id in placeholders.items():
            text = text.replace(placeholder, graph_id)
        result = transpile_request(text, doc)
        counters = result.counters
        stats = measure(lambda: transpile_request(text, doc), runs, warmup)
        execution = measure(lambda: run_request(store, doc, text),
                            runs=10, warmup=2)
        workload[name] = {
            "counters": {
                "s": counters.s, "w": counters.w,
                "k": counters.k, "d": counters.d,
            },
            "transpile": stats,
            "execute": execution,
        }

    return {
        "dataset": str(data_dir),
        "ingest": ingest,
        "workload": workload,
        "phases": phase_report(runs, warmup),
        "scaling": scaling_report(runs, warmup),
    }


def format_report(report: dict[str, Any]) -> str:
    lines = []
    ingest = report["ingest"]
    lines.append(f"dataset: {report['dataset']}")
    vertex_total = sum(ingest["vertices"].values())
    edge_total = sum(ingest["edges"].values())
    lines.append(
        f"ingest: {vertex_total} vertices, {edge_total} edges in "
        f"{ingest['seconds']:.2f}s ({ingest['normalized_zip_codes']} zip codes normalized)")

    lines.append("")
    lines.append("workload (transpile / execute, mean ms):")
    for name, entry in report["workload"].items():
        c = entry["counters"]
        lines.append(
            f"  {name:<18} S={c['s']:<3} W={c['w']} K={c['k']} D={c['d']}  "
            f"{entry['transpile']['mean_ms']:.3f} / {entry['execute']['mean_ms']:.3f}")

    phases = report["phases"]
    lines.append("")
    lines.append(f"phase split on {phases['query']} (total {phases['total_ms']:.3f} ms):")
    for name, stats in phases["phases"].items():
        lines.append(f"  {name:<9} {stats['mean_ms']:.4f} ms  {stats['share_pct']:5.1f}%")

    scaling = report["scaling"]
    lines.append("")
    lines.append("scaling (selection size vs transpile mean ms):")
    for point in scaling["points"]:
        lines.append(f"  S={point['s']:<5} {point['mean_ms']:.3f} ms  (p95 {point['p95_ms']:.3f})")
    lines.append(
        f"  fit: {scaling['slope_ms_per_node'] * 1000:.2f} us/node, "
        f"R^2 = {scaling['r_squared']:.4f}")
    pair = scaling["pair"]
    lines.append(
        f"  equal-size pair S={pair['s']}: wide(D=0) {pair['wide']['mean_ms']:.3f} ms, "
        f"deep(D={pair['deep']['d']}) {pair['deep']['mean_ms']:.3f} ms, "
        f"ratio {pair['ratio']:.2f}")
    return "\n".join(lines)
