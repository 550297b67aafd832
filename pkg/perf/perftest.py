import datetime
import os
import subprocess
import sys


def duration(t1, t2):
    d = t2 - t1
    return 86400 * d.days + d.seconds + 1e-6 * d.microseconds


class Run:
    def __init__(self):
        self.__log = []

    def __logfile(self, cmd):
        fn = os.path.join(os.getcwd(), '%04d.log' % len(self.__log))
        with open(fn, 'w') as f:
            f.write(' '.join(cmd) + '\n' + '-' * 70 + '\n\n')
        return fn

    def __call__(self, *cmd):
        env = dict(os.environ)
        env['CANTOR_LOG'] = 'profile:' + self.__logfile(cmd)
        start = datetime.datetime.now()
        subprocess.run(cmd, env=env, stdout=subprocess.DEVNULL, check=True)
        stop = datetime.datetime.now()
        self.__log.append((cmd, duration(start, stop)))

    def summary(self):
        def pcmd(c):
            return ' '.join(c)

        def ptime(t):
            return '%.3f' % t

        (cs, times) = zip(*self.__log)
        ttime = sum(times)
        cl = max(len(pcmd(c)) for c in cs)
        tl = max(len(ptime(t)) for t in list(times) + [ttime])
        for (c, t) in self.__log:
            print('%*s  %*s' % (tl, ptime(t), -cl, pcmd(c)))
        print('%*s' % (tl, ptime(ttime)))


perftests = {}
perftestdesc = {}


def perftest(desc, name=None):
    def decorator(f):
        def g():
            r = Run()
            f(r)
            r.summary()

        perftests[name or f.__name__] = g
        perftestdesc[name or f.__name__] = desc
        return g

    return decorator


@perftest('Count the components up to degree 60')
def count(r):
    r('cantor', 'count', '--range', '5..60')


@perftest('Box count a 4096 pixel standard Cantor circle')
def boxcount(r):
    r(
        'cantor',
        'render-standard',
        '--degrees',
        '3,3',
        '--size',
        '4096',
        '--depth',
        '24',
        '-o',
        'standard.pgm',
    )
    r('cantor', 'boxcount', 'standard.pgm')


def def_threadtest(threads):
    @perftest(
        'Render a 2048 pixel Julia set with %d threads' % threads,
        'julia-%d' % threads,
    )
    def threadtest(r):
        r(
            'cantor',
            'render-julia',
            '--rho',
            '1',
            '--degrees',
            '3,3',
            '--size',
            '2048',
            '--threads',
            str(threads),
            '-o',
            'julia.pgm',
        )


for threads in [1, 2, 4, 8]:
    def_threadtest(threads)


@perftest('Hausdorff brackets along the tau schedule of (3,3)')
def hdim(r):
    for k in range(2, 7):
        tau = '1e-%d' % k
        r('cantor', 'hdim-bounds', '--rho', '1', '--degrees', '3,3', '--tau', tau)


args = sys.argv[1:]
if len(args) == 0:
    for (fun, desc) in sorted(perftestdesc.items()):
        print('%s: %s' % (fun, desc))
else:
    for test in args:
        perftests[test]()
