"""Text file formats for keys and headers.

Key files open with a single parameter line

    BGW1 <backend params> n=<n>

followed by one hex-encoded element per line. Public key files carry the
roles g=, g<i>= (indices 1..n and n+2..2n; n+1 is structurally absent) and
v=; share files carry exactly one d=<i>:<hex> line. Header files are

    BGWHDR1
    C0=<hex>
    C1=<hex>
    S=<comma-separated indices>

Every reader is strict: unknown prefixes, missing or duplicated roles, and
non-canonical element bytes are all rejected.
"""

from pathlib import Path

from .errors import DecodeError
from .groups import BilinearGroup, CurveParams, make_curve_group, make_mock_group
from .kem import Header, PrivateKeyShare, PublicKey, RecipientSet

KEY_MAGIC = "BGW1"
HEADER_MAGIC = "BGWHDR1"


def _format_params_line(group: BilinearGroup, n: int) -> str:
    return f"{KEY_MAGIC} {group.describe()} n={n}"


def _parse_params_line(line: str) -> tuple[BilinearGroup, int]:
    tokens = line.split()
    if len(tokens) < 3 or tokens[0] != KEY_MAGIC:
        raise DecodeError(f"bad key file magic line {line!r}")
    backend = tokens[1]
    fields = {}
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        if not sep or key in fields:
            raise DecodeError(f"bad parameter token {token!r}")
        try:
            fields[key] = int(value)
        except ValueError:
            raise DecodeError(f"bad parameter token {token!r}") from None
    if "n" not in fields:
        raise DecodeError("key file is missing the user count")
    n = fields.pop("n")
    if n < 1:
        raise DecodeError(f"user count must be positive, got {n}")
    if backend == "mock":
        if set(fields) != {"p"}:
            raise DecodeError(f"mock backend expects p=<prime>, got {sorted(fields)}")
        group = make_mock_group(fields["p"])
    elif backend == "curve":
        if set(fields) != {"q", "p"}:
            raise DecodeError(
                f"curve backend expects q=<prime> p=<prime>, got {sorted(fields)}"
            )
        group = make_curve_group(CurveParams(q=fields["q"], p=fields["p"]))
    else:
        raise DecodeError(f"unknown backend {backend!r}")
    return group, n


def _element_lines(text: str) -> list[str]:
    lines = text.splitlines()
    if not lines:
        raise DecodeError("empty key file")
    return lines


def _decode_hex(value: str) -> bytes:
    try:
        return bytes.fromhex(value)
    except ValueError:
        raise DecodeError(f"bad hex value {value!r}") from None


def write_public_key(path, pk: PublicKey) -> None:
    lines = [_format_params_line(pk.group, pk.n)]
    lines.append(f"g={pk.group.encode(pk.g).hex()}")
    for i in sorted(pk.powers):
        lines.append(f"g{i}={pk.group.encode(pk.powers[i]).hex()}")
    lines.append(f"v={pk.group.encode(pk.v).hex()}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_public_key(path) -> PublicKey:
    lines = _element_lines(Path(path).read_text())
    group, n = _parse_params_line(lines[0])
    expected = {"g", "v"} | {f"g{i}" for i in range(1, 2 * n + 1) if i != n + 1}
    seen = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        role, sep, value = line.partition("=")
        if not sep:
            raise DecodeError(f"malformed key file line {line!r}")
        if role == f"g{n + 1}":
            raise DecodeError(f"public key must not contain the hole power g{n + 1}")
        if role not in expected:
            raise DecodeError(f"unknown role prefix {role!r} in public key file")
        if role in seen:
            raise DecodeError(f"duplicate role {role!r} in public key file")
        seen[role] = group.decode_g(_decode_hex(value))
    missing = expected - set(seen)
    if missing:
        raise DecodeError(f"public key file is missing roles {sorted(missing)}")
    powers = {
        i: seen[f"g{i}"] for i in range(1, 2 * n + 1) if i != n + 1
    }
    return PublicKey(n=n, group=group, g=seen["g"], powers=powers, v=seen["v"])


def write_share(path, group: BilinearGroup, n: int, share: PrivateKeyShare) -> None:
    lines = [
        _format_params_line(group, n),
        f"d={share.index}:{group.encode(share.d).hex()}",
    ]
    Path(path).write_text("\n".join(lines) + "\n")


def read_share(path) -> tuple[BilinearGroup, int, PrivateKeyShare]:
    lines = _element_lines(Path(path).read_text())
    group, n = _parse_params_line(lines[0])
    share = None
    for line in lines[1:]:
        if not line.strip():
            continue
        if not line.startswith("d="):
            raise DecodeError(f"unknown role prefix in share file line {line!r}")
        if share is not None:
            raise DecodeError("share file contains more than one share")
        index_text, sep, value = line[2:].partition(":")
        if not sep:
            raise DecodeError(f"malformed share line {line!r}")
        try:
            index = int(index_text)
        except ValueError:
            raise DecodeError(f"bad share index {index_text!r}") from None
        if not 1 <= index <= n:
            raise DecodeError(f"share index {index} outside 1..{n}")
        share = PrivateKeyShare(index=index, d=group.decode_g(_decode_hex(value)))
    if share is None:
        raise DecodeError("share file contains no share")
    return group, n, share


def write_header_file(path, group: BilinearGroup, header: Header,
                      recipients: RecipientSet) -> None:
    lines = [
        HEADER_MAGIC,
        f"C0={group.encode(header.c0).hex()}",
        f"C1={group.encode(header.c1).hex()}",
        "S=" + ",".join(str(i) for i in recipients),
    ]
    Path(path).write_text("\n".join(lines) + "\n")


def read_header_file(path, group: BilinearGroup) -> tuple[Header, RecipientSet]:
    lines = [line for line in Path(path).read_text().splitlines() if line.strip()]
    if len(lines) != 4 or lines[0] != HEADER_MAGIC:
        raise DecodeError("malformed header file")
    values = {}
    for line, role in zip(lines[1:], ("C0", "C1", "S")):
        prefix = role + "="
        if not line.startswith(prefix):
            raise DecodeError(f"expected {prefix}<...> line, got {line!r}")
        values[role] = line[len(prefix):]
    header = Header(
        c0=group.decode_g(_decode_hex(values["C0"])),
        c1=group.decode_g(_decode_hex(values["C1"])),
    )
    return header, RecipientSet.parse(values["S"])
