"""Binary PNM raster I/O: P5 (grayscale) and P6 (RGB), maxval 255 only.

Header comments are tolerated on read and never emitted on write.  Parse
failures raise PnmError carrying the byte offset of the offending data.
"""

import numpy as np

from .errors import PnmError

_WHITESPACE = b" \t\r\n\v\f"


class _Cursor:
    def __init__(self, data):
        self.data = data
        self.pos = 0

    def skip_space_and_comments(self):
        while self.pos < len(self.data):
            ch = self.data[self.pos : self.pos + 1]
            if ch in _WHITESPACE:
                self.pos += 1
            elif ch == b"#":
                nl = self.data.find(b"\n", self.pos)
                self.pos = len(self.data) if nl < 0 else nl + 1
            else:
                return

    def read_token(self):
        self.skip_space_and_comments()
        start = self.pos
        while (
            self.pos < len(self.data)
            and self.data[self.pos : self.pos + 1] not in _WHITESPACE + b"#"
        ):
            self.pos += 1
        if self.pos == start:
            raise PnmError("unexpected end of header", offset=start)
        return self.data[start : self.pos]

    def read_int(self, what):
        start = self.pos
        token = self.read_token()
        try:
            value = int(token)
        except ValueError:
            raise PnmError(f"{what} is not an integer: {token!r}", offset=start) from None
        return value


def read_pnm(data):
    """Parse P5/P6 bytes into an (H, W) or (H, W, 3) uint8 array plus mode.

    Returns (pixels, mode) with mode 'gray' or 'rgb'.
    """
    cur = _Cursor(bytes(data))
    magic = data[:2]
    if magic not in (b"P5", b"P6"):
        raise PnmError(f"unsupported format magic {magic!r} (need P5 or P6)", offset=0)
    cur.pos = 2
    width = cur.read_int("width")
    height = cur.read_int("height")
    if width < 1 or height < 1:
        raise PnmError(f"invalid dimensions {width}x{height}", offset=2)
    maxval_at = cur.pos
    maxval = cur.read_int("maxval")
    if maxval != 255:
        raise PnmError(f"unsupported maxval {maxval} (need 255)", offset=maxval_at)
    # exactly one whitespace byte separates the header from the raster
    if cur.pos >= len(data) or data[cur.pos : cur.pos + 1] not in _WHITESPACE:
        raise PnmError("missing whitespace after maxval", offset=cur.pos)
    cur.pos += 1
    channels = 1 if magic == b"P5" else 3
    need = width * height * channels
    body = data[cur.pos : cur.pos + need]
    if len(body) < need:
        raise PnmError(
            f"truncated raster: need {need} bytes, have {len(body)}",
            offset=cur.pos + len(body),
        )
    pixels = np.frombuffer(body, dtype=np.uint8).copy()
    if channels == 1:
        return pixels.reshape(height, width), "gray"
    return pixels.reshape(height, width, 3), "rgb"


def write_pnm(pixels):
    """Serialize an (H, W) or (H, W, 3) uint8 array as binary P5/P6."""
    pixels = np.asarray(pixels, dtype=np.uint8)
    if pixels.ndim == 2:
        magic = b"P5"
        height, width = pixels.shape
    elif pixels.ndim == 3 and pixels.shape[2] == 3:
        magic = b"P6"
        height, width = pixels.shape[:2]
    else:
        raise PnmError(f"cannot serialize array of shape {pixels.shape}")
    header = b"%s\n%d %d\n255\n" % (magic, width, height)
    return header + pixels.tobytes()


def read_pnm_file(path):
    with open(path, "rb") as fh:
        return read_pnm(fh.read())


def write_pnm_file(path, pixels):
    with open(path, "wb") as fh:
        fh.write(write_pnm(pixels))
