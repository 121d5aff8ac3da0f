RESULTS = {}


def record(n, ok, label, detail=""):
    RESULTS[n] = (bool(ok), label, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {label}  ({detail})")
