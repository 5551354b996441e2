#!/usr/bin/env python3
"""Regenerates the fixture corpus under tests/fixtures/.

    python3 tests/fixtures/make_fixtures.py

Output is deterministic. Diffs come from GNU `diff -u`, so the C++ diff
parser is checked against an independent producer.
"""

import json
import random
import shutil
import subprocess
import tempfile
from pathlib import Path

HERE = Path(__file__).resolve().parent
RECORDS = HERE / "records"
BAD = HERE / "bad"

EXT = {"php": "php", "js": "js", "ts": "ts", "py": "py", "java": "java", "go": "go", "rb": "rb", "c": "c",
       "html": "html"}

# (vulnerable line, fixed line) per CWE and language; R is replaced by a
# record token so every ground-truth line is unique across the corpus.
VULN = {
    89: {
        "php": ('$rows = mysqli_query($conn, "SELECT * FROM users_R WHERE name = \'" . $_GET[\'user_R\'] . "\'");',
                '$rows = db_select_user_R($conn, $_GET[\'user_R\']);'),
        "py": ('cursor.execute("SELECT * FROM orders_R WHERE id = " + request.args["id_R"])',
               'cursor.execute("SELECT * FROM orders_R WHERE id = %s", (request.args["id_R"],))'),
        "java": ('ResultSet rs = stmt.executeQuery("SELECT * FROM items_R WHERE id = " + req.getParameter("id_R"));',
                 'ResultSet rs = lookupItemR(conn, req.getParameter("id_R"));'),
        "go": ('rows, err := db.Query("SELECT * FROM accounts_R WHERE id = " + r.URL.Query().Get("id_R"))',
               'rows, err := db.Query("SELECT * FROM accounts_R WHERE id = ?", r.URL.Query().Get("id_R"))'),
        "js": ('db.query("SELECT * FROM posts_R WHERE slug = \'" + req.query.slug_R + "\'", done);',
               'db.query("SELECT * FROM posts_R WHERE slug = ?", [req.query.slug_R], done);'),
        "rb": ('User.where("name = \'#{params[:name_R]}\'")',
               'User.where(name: params[:name_R])'),
    },
    79: {
        "php": ('echo "<p>Hello " . $_GET[\'name_R\'] . "</p>";',
                'echo "<p>Hello " . htmlspecialchars($_GET[\'name_R\'], ENT_QUOTES) . "</p>";'),
        "js": ('panel_R.innerHTML = params.get("q_R");',
               'panel_R.textContent = params.get("q_R");'),
        "ts": ('banner_R.innerHTML = query.get("msg_R") ?? "";',
               'banner_R.textContent = query.get("msg_R") ?? "";'),
        "py": ('return "<h1>" + request.args.get("title_R") + "</h1>"',
               'return "<h1>" + escape(request.args.get("title_R")) + "</h1>"'),
        "rb": ('raw(params[:bio_R])',
               'sanitize(params[:bio_R])'),
        "html": ('<div class="notice"><?php echo $_GET[\'msg_R\']; ?></div>',
                 '<div class="notice"><?php echo htmlspecialchars($_GET[\'msg_R\']); ?></div>'),
        "go": ('fmt.Fprintf(w, "<p>%s</p>", r.URL.Query().Get("q_R"))',
               'fmt.Fprintf(w, "<p>%s</p>", html.EscapeString(r.URL.Query().Get("q_R")))'),
    },
    22: {
        "php": ('$data = file_get_contents("/var/data/" . $_GET[\'file_R\']);',
                '$data = file_get_contents("/var/data/" . basename($_GET[\'file_R\']));'),
        "py": ('with open(os.path.join(BASE_R, request.args["path_R"])) as fh:',
               'with open(safe_join(BASE_R, request.args["path_R"])) as fh:'),
        "java": ('File target = new File(baseDir, req.getParameter("file_R"));',
                 'File target = resolveInside(baseDir, req.getParameter("file_R"));'),
        "go": ('data, err := os.ReadFile(filepath.Join(root, r.URL.Query().Get("f_R")))',
               'data, err := os.ReadFile(filepath.Join(root, filepath.Base(r.URL.Query().Get("f_R"))))'),
        "c": ('snprintf(path_R, sizeof(path_R), "%s/%s", root_dir, user_name);',
              'snprintf(path_R, sizeof(path_R), "%s/%s", root_dir, basename(user_name));'),
        "js": ('fs.readFile(path.join(root, req.params.file_R), send);',
               'fs.readFile(path.join(root, path.basename(req.params.file_R)), send);'),
        "rb": ('File.read(File.join(ROOT, params[:file_R]))',
               'File.read(File.join(ROOT, File.basename(params[:file_R])))'),
    },
}

WORDS = ["alpha", "bravo", "charlie", "delta", "echo", "foxtrot", "golf", "hotel", "india", "juliet", "kilo", "lima",
         "mike", "november", "oscar", "papa", "quebec", "romeo", "sierra", "tango", "uniform", "victor", "whiskey"]


def statement(lang, fn, j, rng):
    w = rng.choice(WORDS)
    n = rng.randint(2, 999)
    tok = f"{fn}_{j}"
    if lang in ("php", "html"):
        return f"$item_{tok} = strtoupper(trim($input)) . '{w}-{n}';"
    if lang in ("js", "ts"):
        return f'const item_{tok} = String(value).trim() + "{w}-{n}";'
    if lang == "py":
        return f'item_{tok} = str(value).strip() + "{w}-{n}"'
    if lang == "rb":
        return f'item_{tok} = value.to_s.strip + "{w}-{n}"'
    if lang == "java":
        return f'String item_{tok} = String.valueOf(value).trim() + "{w}-{n}";'
    if lang == "go":
        return f'item_{tok} := strings.TrimSpace(value) + "{w}-{n}"'
    if lang == "c":
        return f"int item_{tok} = (int)strlen(value) + {n};"
    raise ValueError(lang)


def function(lang, name, body):
    """body: list of statement strings (unindented)."""
    if lang == "php":
        return f"function {name}($input) {{\n" + "".join(f"    {s}\n" for s in body) + "    return $input;\n}\n"
    if lang in ("js", "ts"):
        sig = f"function {name}(value: string): string {{" if lang == "ts" else f"function {name}(value) {{"
        return sig + "\n" + "".join(f"  {s}\n" for s in body) + "  return value;\n}\n"
    if lang == "py":
        return f"def {name}(value):\n" + "".join(f"    {s}\n" for s in body) + "    return value\n"
    if lang == "rb":
        return f"def {name}(value)\n" + "".join(f"  {s}\n" for s in body) + "  value\nend\n"
    if lang == "java":
        return (f"    public String {name}(String value) {{\n" + "".join(f"        {s}\n" for s in body)
                + "        return value;\n    }\n")
    if lang == "go":
        return f"func {name}(value string) string {{\n" + "".join(f"\t{s}\n" for s in body) + "\treturn value\n}\n"
    if lang == "c":
        return (f"static int {name}(const char *value) {{\n" + "".join(f"    {s}\n" for s in body)
                + "    return 0;\n}\n")
    if lang == "html":
        return (f'<section id="{name}">\n' + "".join(f"  <p>{s}</p>\n" for s in body) + "</section>\n")
    raise ValueError(lang)


def prologue(lang, token):
    return {
        "php": "<?php\n\n",
        "js": "'use strict';\n\n",
        "ts": "export {};\n\n",
        "py": "import os\n\n",
        "rb": "# frozen_string_literal: true\n\n",
        "java": f"public class Handler{token} {{\n\n",
        "go": "package main\n\n",
        "c": "#include <stdio.h>\n#include <string.h>\n\n",
        "html": "<!DOCTYPE html>\n<html>\n<body>\n\n",
    }[lang]


def epilogue(lang):
    return {"java": "}\n", "html": "</body>\n</html>\n"}.get(lang, "")


def build_file(lang, token, rng, target_size, vuln_at, vuln_lines, extra=0):
    """Returns (pre, post_builder_data). vuln_lines: list of (bad, good) placed in one function."""
    funcs = []
    size = len(prologue(lang, token)) + len(epilogue(lang))
    i = 0
    while size < target_size:
        n = rng.choice([2, 3, 4, 6, 8, 12, 16, 22])
        body = [statement(lang, f"{token}_{i}", j, rng) for j in range(n)]
        name = f"helper_{token}_{i}"
        funcs.append((name, body))
        size += len(function(lang, name, body)) + 1
        i += 1
    vi = min(len(funcs) - 1, int(vuln_at * len(funcs)))
    name, body = funcs[vi]
    at = rng.randint(0, len(body))
    for k, pair in enumerate(vuln_lines):
        body.insert(min(len(body), at + k), ("VULN", pair))
    funcs[vi] = (name, body)
    for k in range(extra):
        # extra hunks far from the main one
        ei = (vi + (k + 1) * max(1, len(funcs) // (extra + 1))) % len(funcs)
        if ei == vi:
            continue
        n2, b2 = funcs[ei]
        b2.insert(len(b2) // 2, ("VULN", (statement(lang, f"x{token}{k}", 0, rng), statement(lang, f"y{token}{k}", 0, rng))))
        funcs[ei] = (n2, b2)

    def render(which):
        out = prologue(lang, token)
        for idx, (name, body) in enumerate(funcs):
            lines = [s[1][which] if isinstance(s, tuple) else s for s in body]
            out += function(lang, name, lines) + "\n"
        return out + epilogue(lang)

    return render(0), render(1)


def udiff(pre, post, ext):
    with tempfile.TemporaryDirectory() as d:
        a = Path(d) / "a"
        b = Path(d) / "b"
        a.write_bytes(pre.encode())
        b.write_bytes(post.encode())
        res = subprocess.run(["diff", "-u", "--label", f"a/src/file.{ext}", "--label", f"b/src/file.{ext}",
                              str(a), str(b)], capture_output=True)
        assert res.returncode == 1, res
        return res.stdout.decode()


def pool_files(lang, token, rng, total):
    files = {}
    k = 0
    while sum(len(v) for v in files.values()) < total:
        text = prologue(lang, f"{token}P{k}")
        i = 0
        while len(text) < 9000:
            n = rng.choice([3, 4, 5, 6, 8, 10, 12])
            body = [statement(lang, f"p{token}_{k}_{i}", j, rng) for j in range(n)]
            text += function(lang, f"support_{token}_{k}_{i}", body) + "\n"
            i += 1
        files[f"module_{k}.{EXT[lang]}"] = text + epilogue(lang)
        k += 1
    return files


def write_record(rid, cwe, lang, pre, post, pool=None, source=None):
    d = RECORDS / rid
    d.mkdir(parents=True)
    ext = EXT[lang]
    (d / f"pre.{ext}").write_bytes(pre.encode())
    (d / f"post.{ext}").write_bytes(post.encode())
    (d / "fix.diff").write_bytes(udiff(pre, post, ext).encode())
    (d / "meta.json").write_text(json.dumps({"record_id": rid, "cwe": f"CWE-{cwe}",
                                             "source_ref": source or f"synthetic fixture {rid}"}, indent=2) + "\n")
    if pool:
        (d / "pool").mkdir()
        for name, text in sorted(pool.items()):
            (d / "pool" / name).write_bytes(text.encode())


def main():
    rng = random.Random(20240611)
    shutil.rmtree(RECORDS, ignore_errors=True)
    shutil.rmtree(BAD, ignore_errors=True)
    RECORDS.mkdir(parents=True)

    plan = []
    for cwe, per_cwe in ((22, 20), (79, 20), (89, 20)):
        langs = sorted(VULN[cwe])
        for i in range(per_cwe):
            plan.append((cwe, langs[i % len(langs)], i))

    for cwe, lang, i in plan:
        rid = f"cwe{cwe}-{lang}-{i:02d}"
        token = f"r{cwe}x{i:02d}"
        target = rng.choice([2500, 3500, 5000, 7000, 9000, 12000, 15000])
        vuln_at = rng.random()
        bad, good = VULN[cwe][lang]
        pairs = [(bad.replace("_R", "_" + token).replace("R(", token + "("), good.replace("_R", "_" + token)
                  .replace("R(", token + "("))]
        if i % 5 == 3:
            # two consecutive changed lines
            pairs.append((statement(lang, f"v{token}", 99, rng), statement(lang, f"w{token}", 99, rng)))
        extra = 2 if i == 7 else 0  # three-hunk fix
        pre, post = build_file(lang, token, rng, target, vuln_at, pairs, extra)
        # Pool for the records nearest the middle of the size range, enough to pad to 25,000.
        pool = pool_files(lang, token, rng, 27000) if target in (5000, 7000, 9000) else None
        if i == 11:
            pre, post = pre.rstrip("\n"), post.rstrip("\n")  # no trailing newline
        if i == 13 and lang != "py":
            pre, post = pre.replace("\n", "\r\n"), post.replace("\n", "\r\n")
        write_record(rid, cwe, lang, pre, post, pool)

    # Corrupted triples: each must be rejected at ingest.
    ok = sorted(RECORDS.glob("cwe79-php-*"))[0]
    pre = (ok / "pre.php").read_text()
    post = (ok / "post.php").read_text()
    diff = (ok / "fix.diff").read_text()

    def bad(name, files):
        d = BAD / name
        d.mkdir(parents=True)
        for fname, text in files.items():
            (d / fname).write_text(text)
        (d / "meta.json").write_text(json.dumps({"record_id": name, "cwe": "CWE-79"}) + "\n")

    bad("post-mismatch", {"pre.php": pre, "post.php": post + "// tampered\n", "fix.diff": diff})
    context = next(line[1:] for line in diff.splitlines(keepends=True)
                   if line.startswith(" ") and any(c.isalnum() for c in line))
    drifted = context.replace(context.strip(), "// drifted " + context.strip(), 1)
    bad("context-mismatch", {"pre.php": pre.replace(context, drifted, 1),
                             "post.php": post.replace(context, drifted, 1), "fix.diff": diff})
    bad("bad-hunk-header", {"pre.php": pre, "post.php": post, "fix.diff": diff.replace("@@ -", "@@ ~", 1)})
    only_plus = udiff(pre, pre.replace("<?php\n", "<?php\n// added\n", 1), "php")
    bad("only-additions", {"pre.php": pre, "post.php": pre.replace("<?php\n", "<?php\n// added\n", 1),
                           "fix.diff": only_plus})
    bad("excluded-extension", {"pre.md": pre, "post.md": post, "fix.diff": diff})
    bad("rename-header", {"pre.php": pre, "post.php": post,
                          "fix.diff": "diff --git a/x.php b/y.php\nrename from x.php\nrename to y.php\n" + diff})
    bad("truncated-hunk", {"pre.php": pre, "post.php": post, "fix.diff": "\n".join(diff.splitlines()[:-3]) + "\n"})
    bad("identical-files", {"pre.php": pre, "post.php": pre, "fix.diff": diff})


if __name__ == "__main__":
    main()
