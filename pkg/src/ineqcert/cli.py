"""Command-line front end.

A thin client of the verification service: by default requests run against
the FastAPI app in-process (no network); ``--server URL`` targets a running
instance instead.

Exit codes: 0 proven / success, 2 refuted, 3 inconclusive, 64 usage error,
74 file error.
"""

from __future__ import annotations

import asyncio
import json
import os
import sys

import click
import httpx

EXIT_REFUTED = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64
EXIT_FILE = 74


class ServiceClient:
    """HTTP-shaped access to the service, in-process unless a URL is given."""

    def __init__(self, server: str | None = None):
        self.server = server

    def request(self, method: str, path: str, json_body=None, params=None) -> tuple[int, object]:
        if self.server:
            with httpx.Client(base_url=self.server, timeout=600.0) as client:
                r = client.request(method, path, json=json_body, params=params)
                return r.status_code, _maybe_json(r)

        async def _go():
            from .service.app import app

            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(transport=transport, base_url="http://ineqcert.internal") as client:
                r = await client.request(method, path, json=json_body, params=params)
                return r.status_code, _maybe_json(r)

        return asyncio.run(_go())

    def get(self, path: str, params=None):
        return self.request("GET", path, params=params)

    def post(self, path: str, json_body=None, params=None):
        return self.request("POST", path, json_body=json_body, params=params)


def _maybe_json(r: httpx.Response):
    try:
        return r.json()
    except ValueError:
        return r.text


def _client(ctx) -> ServiceClient:
    return ServiceClient(ctx.obj.get("server"))


def _fail_http(status: int, data) -> None:
    detail = data.get("detail") if isinstance(data, dict) else data
    click.echo(f"error: {detail}", err=True)
    sys.exit(EXIT_USAGE if status in (404, 422) else 1)


STATUS_EXIT = {
    "proven": 0,
    "proven-on-truncation": 0,
    "refuted": EXIT_REFUTED,
    "inconclusive": EXIT_INCONCLUSIVE,
}


@click.group()
@click.option("--server", default=None, help="URL of a running service; default runs in-process.")
@click.version_option(package_name="ineqcert")
@click.pass_context
def main(ctx, server):
    """Certified trigonometric/hyperbolic inequality toolkit."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command("list")
@click.option("--filter", "section", type=click.Choice(["sec1", "sec2", "sec3"]), default=None)
@click.pass_context
def list_cmd(ctx, section):
    """List catalog records with their citations."""
    status, data = _client(ctx).get("/records", params={"section": section} if section else None)
    if status != 200:
        _fail_http(status, data)
    for row in data:
        click.echo(f"{row['id']:28s} [{row['section']}] {row['citation']}")


@main.command()
@click.argument("record_id")
@click.pass_context
def show(ctx, record_id):
    """Show one record: statement, domain, sharpness, citation."""
    status, data = _client(ctx).get(f"/records/{record_id}")
    if status != 200:
        _fail_http(status, data)
    click.echo(f"id:        {data['id']}")
    click.echo(f"kind:      {data['kind']}")
    click.echo(f"statement: {data['statement']}")
    if data.get("sharp_at"):
        click.echo(f"sharp at:  {', '.join(data['sharp_at'])}")
    click.echo(f"expected:  {data['expected']}")
    if data.get("truncated"):
        click.echo(f"truncated: yes (claimed domain: {data.get('original_domain')})")
    click.echo(f"citation:  {data['citation']}")
    if data.get("notes"):
        click.echo(f"notes:     {data['notes']}")


@main.command()
@click.argument("record_id")
@click.option("--depth", type=int, default=None, help="Bisection depth limit.")
@click.option("--delta", type=float, default=None, help="Sharpness exclusion radius.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--catalog", "catalog_file", type=click.Path(exists=False), default=None,
              help="Verify a statement from a user DSL file instead of the built-in catalog.")
@click.pass_context
def verify(ctx, record_id, depth, delta, json_path, catalog_file):
    """Verify one record; exit 0 proven, 2 refuted, 3 inconclusive."""
    client = _client(ctx)
    if catalog_file is not None:
        text = _read_file(catalog_file)
        status, data = client.post("/check", json_body={"statements": text})
        if status != 200:
            _fail_http(status, data)
        match = [r for r in data["results"] if r["id"] == record_id]
        if not match:
            click.echo(f"error: no statement {record_id!r} in {catalog_file}", err=True)
            sys.exit(EXIT_USAGE)
        result = match[0]
        click.echo(f"{record_id}: {result['status']}")
        if result.get("counterexample"):
            ce = result["counterexample"]
            click.echo(f"counterexample: x = {ce['x']['dec']}, lhs = {ce['lhs']['dec']}, rhs = {ce['rhs']['dec']}")
        if json_path:
            _write_file(json_path, json.dumps(result, indent=1) + "\n")
        sys.exit(STATUS_EXIT.get(result["status"], 1))
    body = {}
    if depth is not None:
        body["depth"] = depth
    if delta is not None:
        body["delta"] = delta
    status, data = client.post(f"/verify/{record_id}", json_body=body or None)
    if status != 200:
        _fail_http(status, data)
    click.echo(f"{record_id}: {data['status']} ({len(data['cells'])} cells, depth {data['depth']})")
    if data.get("counterexample"):
        ce = data["counterexample"]
        click.echo(f"counterexample: x = {ce['x']['dec']}, lhs = {ce['lhs']['dec']}, rhs = {ce['rhs']['dec']}")
    if json_path:
        _write_file(json_path, json.dumps(data, indent=1) + "\n")
    sys.exit(STATUS_EXIT.get(data["status"], 1))


@main.command("verify-all")
@click.option("--jobs", type=int, default=1)
@click.option("--depth", type=int, default=None)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@click.pass_context
def verify_all_cmd(ctx, jobs, depth, out_dir):
    """Certify the whole catalog; nonzero exit on any unexpected status."""
    client = _client(ctx)
    body = {"jobs": jobs}
    if depth is not None:
        body["depth"] = depth
    status, data = client.post("/verify-all", json_body=body)
    if status != 200:
        _fail_http(status, data)
    for o in data["outcomes"]:
        flag = "ok" if o["expected_ok"] else "UNEXPECTED"
        click.echo(
            f"{o['id']:28s} {o['status']:22s} cells={o['cells']:5d} depth={o['depth']:3d} "
            f"{o['seconds']:7.2f}s  {flag}"
        )
    click.echo(f"total: {data['total_seconds']:.1f}s  all_expected: {data['all_expected']}")
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        report = {
            "schema": "ineqcert.report/1",
            "version": data["version"],
            "all_expected": data["all_expected"],
            "outcomes": [
                {k: o[k] for k in ("id", "kind", "status", "expected_ok", "cells", "depth")}
                | ({"note": o["note"]} if o.get("note") else {})
                for o in data["outcomes"]
            ],
        }
        _write_file(os.path.join(out_dir, "report.json"), json.dumps(report, indent=1) + "\n")
        for o in data["outcomes"]:
            c_status, cert = client.post(f"/verify/{o['id']}", json_body={"depth": depth} if depth else None)
            if c_status == 200:
                _write_file(os.path.join(out_dir, f"{o['id']}.json"), json.dumps(cert, indent=1) + "\n")
    sys.exit(0 if data["all_expected"] else 1)


@main.command()
@click.pass_context
def constants(ctx):
    """Best-possible constants: definition, enclosure, printed decimal, |diff|."""
    status, data = _client(ctx).get("/constants")
    if status != 200:
        _fail_http(status, data)
    click.echo(f"{'id':22s} {'definition':34s} {'computed':>14s} {'paper':>10s} {'|diff|':>10s} ok")
    for r in data:
        mid = 0.5 * (r["enclosure_lo"] + r["enclosure_hi"])
        click.echo(
            f"{r['id']:22s} {r['definition']:34s} {mid:14.7f} {r['reference']:10.5f} "
            f"{r['abs_diff']:10.2e} {'yes' if r['within_tolerance'] else 'NO'}"
        )
        if r.get("notes"):
            click.echo(f"    note: {r['notes']}")


@main.command()
@click.pass_context
def roots(ctx):
    """Root enclosures and the certified minimum value."""
    status, data = _client(ctx).get("/roots")
    if status != 200:
        _fail_http(status, data)
    for r in data["roots"]:
        click.echo(
            f"{r['id']:10s} [{r['enclosure_lo']:.8f}, {r['enclosure_hi']:.8f}]  "
            f"reference {r['reference']}  |diff| {r['abs_diff']:.2e}  {'ok' if r['passed'] else 'FAIL'}"
        )
    v = data.get("value_at_x1")
    if v:
        click.echo(
            f"f(x1)      [{v['enclosure_lo']:.8f}, {v['enclosure_hi']:.8f}]  "
            f"reference {v['reference']}  {'ok' if v['passed'] else 'FAIL'}"
        )


@main.command()
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def gaps(ctx, csv_path):
    """Reported gap bounds vs rigorous recomputation (CSV with --csv)."""
    status, data = _client(ctx).get("/gaps")
    if status != 200:
        _fail_http(status, data)
    lines = ["id,kind,grid_max,rigorous_upper,reported_bound,pass"]
    for r in data:
        lines.append(
            f"{r['id']},{r['kind']},{r['grid_max']:.9g},{r['rigorous_upper']:.9g},"
            f"{r['reported_bound']:.9g},{str(r['passed']).lower()}"
        )
    text = "\n".join(lines) + "\n"
    click.echo(text, nl=False)
    if csv_path:
        _write_file(csv_path, text)
    sys.exit(0 if all(r["passed"] for r in data) else 1)


@main.command()
@click.argument("name")
@click.option("--terms", type=int, default=28)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.pass_context
def series(ctx, name, terms, fmt):
    """Exact series coefficients as numerator/denominator strings."""
    status, data = _client(ctx).get(f"/series/{name}", params={"terms": terms})
    if status != 200:
        _fail_http(status, data)
    if fmt == "json":
        click.echo(json.dumps(data, indent=1))
    else:
        click.echo("n,power,numerator,denominator")
        c = data["constant"]
        click.echo(f"0,0,{c['numerator']},{c['denominator']}")
        for row in data["coefficients"]:
            click.echo(f"{row['n']},{row['power']},{row['numerator']},{row['denominator']}")


@main.command()
@click.argument("path", type=click.Path(exists=False))
@click.pass_context
def check(ctx, path):
    """Parse and verify a user DSL statement file (one statement per line)."""
    text = _read_file(path)
    status, data = _client(ctx).post("/check", json_body={"statements": text})
    if status != 200:
        _fail_http(status, data)
    for r in data["results"]:
        click.echo(f"{r['id']:16s} {r['status']:22s} {r['statement']}")
        if r.get("counterexample"):
            ce = r["counterexample"]
            click.echo(f"    counterexample: x = {ce['x']['dec']}, lhs = {ce['lhs']['dec']}, rhs = {ce['rhs']['dec']}")
    if all(r["status"].startswith("proven") for r in data["results"]):
        sys.exit(0)
    if any(r["status"] == "refuted" for r in data["results"]):
        sys.exit(EXIT_REFUTED)
    sys.exit(EXIT_INCONCLUSIVE)


@main.command()
@click.argument("text", required=False)
@click.option("--check", "check_path", type=click.Path(exists=False), default=None,
              help="Validate every statement in a DSL file (parse only).")
@click.pass_context
def parse(ctx, text, check_path):
    """Parse an expression (or statements with --check) and echo the canonical form."""
    client = _client(ctx)
    if check_path is not None:
        content = _read_file(check_path)
        bad = 0
        for lineno, raw in enumerate(content.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            first = line.split(None, 1)[0]
            if first.endswith(":") and first[:-1].isidentifier():
                line = line.split(None, 1)[1].strip() if " " in line else ""
            status, data = client.post("/parse", json_body={"text": line, "statement": True})
            if status != 200:
                _fail_http(status, data)
            if data["ok"]:
                click.echo(f"{check_path}:{lineno}: ok: {data['printed']}")
            else:
                bad += 1
                click.echo(f"{check_path}:{lineno}: {data['error']}", err=True)
        sys.exit(EXIT_USAGE if bad else 0)
    if not text:
        click.echo("error: provide an expression or --check FILE", err=True)
        sys.exit(EXIT_USAGE)
    status, data = client.post("/parse", json_body={"text": text, "statement": False})
    if status != 200:
        _fail_http(status, data)
    if not data["ok"]:
        click.echo(f"error: {data['error']}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(data["printed"])


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the verification service."""
    import uvicorn

    uvicorn.run("ineqcert.service.app:app", host=host, port=port)


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FILE)


def _write_file(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FILE)


def entrypoint():
    try:
        main(standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.exceptions.Abort:
        sys.exit(130)


if __name__ == "__main__":
    entrypoint()
