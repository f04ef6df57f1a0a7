"""Built-in example schemas and the MovieLens 100k file tooling."""

from __future__ import annotations

import random
from pathlib import Path

from .schema import GraphSchema


def todo_schema_dict() -> dict:
    """Small two-vertex schema: users that like each other and own todos."""
    return {
        "vertices": [
            {
                "id": "user",
                "label": "User",
                "properties": [
                    {"key": "name", "datatype": "String", "required": True},
                    {"key": "age", "datatype": "Int", "required": False},
                ],
            },
            {
                "id": "todo",
                "label": "Todo",
                "properties": [
                    {"key": "checked", "datatype": "Boolean", "required": True},
                ],
            },
        ],
        "edges": [
            {
                "id": "likes",
                "label": "likes",
                "source": "user",
                "target": "user",
                "properties": [
                    {"key": "strength", "datatype": "Float", "required": True},
                ],
            },
            {
                "id": "owns",
                "label": "owns",
                "source": "user",
                "target": "todo",
                "properties": [],
            },
        ],
    }


def todo_schema() -> GraphSchema:
    return GraphSchema.from_dict(todo_schema_dict())


def movielens_schema_dict() -> dict:
    return {
        "vertices": [
            {
                "id": "genre",
                "label": "Genre",
                "properties": [
                    {"key": "genreId", "datatype": "Int", "required": True},
                    {"key": "name", "datatype": "String", "required": True},
                ],
            },
            {
                "id": "occupation",
                "label": "Occupation",
                "properties": [
                    {"key": "occupationId", "datatype": "Int", "required": True},
                    {"key": "name", "datatype": "String", "required": True},
                ],
            },
            {
                "id": "user",
                "label": "User",
                "properties": [
                    {"key": "userId", "datatype": "Int", "required": True},
                    {"key": "age", "datatype": "Int", "required": True},
                    {"key": "gender", "datatype": "String", "required": True},
                    {"key": "zipCode", "datatype": "Int", "required": True},
                ],
            },
            {
                "id": "movie",
                "label": "Movie",
                "properties": [
                    {"key": "movieId", "datatype": "Int", "required": True},
                    {"key": "title", "datatype": "String", "required": True},
                    {"key": "releaseDate", "datatype": "String", "required": False},
                    {"key": "imdbUrl", "datatype": "String", "required": False},
                ],
            },
        ],
        "edges": [
            {
                "id": "hasGenre",
                "label": "hasGenre",
                "source": "movie",
                "target": "genre",
                "properties": [],
            },
            {
                "id": "rated",
                "label": "rated",
                "source": "user",
                "target": "movie",
                "properties": [
                    {"key": "rating", "datatype": "Int", "required": True},
                    {"key": "timestamp", "datatype": "String", "required": True},
                ],
            },
            {
                "id": "worksAs",
                "label": "worksAs",
                "source": "user",
                "target": "occupation",
                "properties": [],
            },
        ],
    }


def movielens_schema() -> GraphSchema:
    return GraphSchema.from_dict(movielens_schema_dict())


GENRE_NAMES = [
    "unknown", "Action", "Adventure", "Animation", "Children's", "Comedy",
    "Crime", "Documentary", "Drama", "Fantasy", "Film-Noir", "Horror",
    "Musical", "Mystery", "Romance", "Sci-Fi", "Thriller", "War", "Western",
]

OCCUPATION_NAMES = [
    "administrator", "artist", "doctor", "educator", "engineer",
    "entertainment", "executive", "healthcare", "homemaker", "lawyer",
    "librarian", "marketing", "none", "other", "programmer", "retired",
    "salesman", "scientist", "student", "technician", "writer",
]


def write_ml100k_fixture(directory: str | Path, users: int = 943, movies: int = 1682,
                         ratings: int = 100000, seed: int = 20) -> Path:
    """Write a deterministic dataset in the MovieLens 100k file formats.

    Produces u.data, u.item, u.user, u.genre, and u.occupation with the
    original cardinalities and the original quirks: latin-1 movie titles,
    an empty release date, and a handful of non-numeric zip codes. Useful
    where the real archive is not on disk; the ingest code cannot tell the
    difference.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    rng = random.Random(seed)

    with open(directory / "u.genre", "w", encoding="latin-1") as fh:
        for i, name in enumerate(GENRE_NAMES):
            fh.write(f"{name}|{i}\n")

    with open(directory / "u.occupation", "w", encoding="latin-1") as fh:
        for name in OCCUPATION_NAMES:
            fh.write(f"{name}\n")

    with open(directory / "u.user", "w", encoding="latin-1") as fh:
        for uid in range(1, users + 1):
            age = 7 + (uid * 13) % 66
            gender = "M" if uid % 3 else "F"
            occupation = OCCUPATION_NAMES[uid % len(OCCUPATION_NAMES)]
            if uid % 200 == 0:
                zip_code = f"T{uid % 10}J8L{uid % 7}"  # a few Canadian-style codes
            else:
                zip_code = f"{10000 + uid * 37 % 89999:05d}"
            fh.write(f"{uid}|{age}|{gender}|{occupation}|{zip_code}\n")

    with open(directory / "u.item", "w", encoding="latin-1") as fh:
        for mid in range(1, movies + 1):
            if mid == 1:
                title, release = "unknown", ""
            else:
                year = 1930 + (mid * 7) % 69
                title = f"Film {mid} \xe9dition ({year})" if mid % 97 == 0 else f"Film {mid} ({year})"
                release = f"0{1 + mid % 9}-Jan-{year}"
            url = "" if mid % 113 == 0 else f"http://us.imdb.com/M/title-exact?Film{mid}"
            flags = [0] * len(GENRE_NAMES)
            if mid == 1:
                flags[0] = 1
            else:
                flags[1 + (mid * 5) % 18] = 1
                if mid % 3 == 0:
                    flags[1 + (mid * 11 + 4) % 18] = 1
            fields = [str(mid), title, release, "", url] + [str(f) for f in flags]
            fh.write("|".join(fields) + "\n")

    pairs: set[tuple[int, int]] = set()
    with open(directory / "u.data", "w", encoding="latin-1") as fh:
        written = 0
        while written < ratings:
            uid = rng.randint(1, users)
            mid = rng.randint(1, movies)
            if (uid, mid) in pairs:
                continue
            pairs.add((uid, mid))
            stamp = 874724710 + rng.randint(0, 19000000)
            fh.write(f"{uid}\t{mid}\t{rng.randint(1, 5)}\t{stamp}\n")
            written += 1

    return directory
