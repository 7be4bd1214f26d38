import asyncio

from absl import app, logging

from incidence_workbench.cli import commands


async def dispatch_main(args: list[str]) -> int:
  logging.info(f'Running {args[1:]}.')
  return await commands.run(args[1:])


def app_run_main() -> None:
  app.run(lambda args: asyncio.run(dispatch_main(args)))


# incidence-workbench ideal --catalog=fano
# incidence-workbench enumerate --n=8 --superfigurations
# incidence-workbench catalog verify fano mobius-kantor --workers=2
