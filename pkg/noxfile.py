import nox


@nox.session(python=["3.13"])
def tests(session):
    session.install(".[test]")
    session.run("pytest", "./tests")


@nox.session(python=["3.13"])
def quick(session):
    session.install(".[test]")
    session.run("pytest", "-m", "not slow", "./tests")


@nox.session
def lint(session):
    session.install("flake8")
    session.run("flake8", "--max-line-length=100", "./src", "./tests")
